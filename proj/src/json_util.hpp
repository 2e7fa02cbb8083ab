/******************************************************************************

  This source file is part of the chemdata project.

  This source code is released under the 3-Clause BSD License, (see LICENSE).

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.

******************************************************************************/

#ifndef CHEMDATA_JSON_UTIL_HPP
#define CHEMDATA_JSON_UTIL_HPP

#include "chemdata/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <string>
#include <vector>

namespace chemdata::detail {

// ordered_json keeps input key order, which is what lets unknown keys round
// trip verbatim.
using Json = nlohmann::ordered_json;

inline std::string joinPath(const std::string& base, const std::string& key)
{
  return base.empty() ? key : base + "." + key;
}

inline std::string indexPath(const std::string& base, std::size_t index)
{
  return base + "[" + std::to_string(index) + "]";
}

inline Json parseText(const std::string& text)
{
  Json parsed = Json::parse(text, nullptr, false);
  if (parsed.is_discarded())
    throw Error(ErrorCode::MalformedJson, "input is not well-formed JSON");
  return parsed;
}

inline const Json& requireObject(const Json& value, const std::string& path)
{
  if (!value.is_object())
    throw Error(ErrorCode::SchemaViolation, "expected an object", path);
  return value;
}

inline const Json& requireArray(const Json& value, const std::string& path)
{
  if (!value.is_array())
    throw Error(ErrorCode::SchemaViolation, "expected an array", path);
  return value;
}

inline const Json& requireKey(const Json& object, const char* key,
                              const std::string& path)
{
  requireObject(object, path);
  auto it = object.find(key);
  if (it == object.end()) {
    throw Error(ErrorCode::SchemaViolation,
                std::string("missing required key \"") + key + "\"", path);
  }
  return *it;
}

inline std::string requireString(const Json& value, const std::string& path)
{
  if (!value.is_string())
    throw Error(ErrorCode::SchemaViolation, "expected a string", path);
  return value.get<std::string>();
}

inline long long requireInt(const Json& value, const std::string& path)
{
  if (!value.is_number_integer())
    throw Error(ErrorCode::SchemaViolation, "expected an integer", path);
  return value.get<long long>();
}

inline double requireNumber(const Json& value, const std::string& path)
{
  if (!value.is_number())
    throw Error(ErrorCode::SchemaViolation, "expected a number", path);
  double v = value.get<double>();
  if (!std::isfinite(v))
    throw Error(ErrorCode::SchemaViolation, "expected a finite number", path);
  return v;
}

inline std::vector<double> requireNumberArray(const Json& value,
                                              const std::string& path)
{
  requireArray(value, path);
  std::vector<double> out;
  out.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i)
    out.push_back(requireNumber(value[i], indexPath(path, i)));
  return out;
}

inline std::vector<int> requireIntArray(const Json& value,
                                        const std::string& path)
{
  requireArray(value, path);
  std::vector<int> out;
  out.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i)
    out.push_back(static_cast<int>(requireInt(value[i], indexPath(path, i))));
  return out;
}

// Collects keys of `object` not present in `known` into an extras object,
// preserving their document order.
template <std::size_t N>
inline Json collectExtras(const Json& object,
                          const std::array<const char*, N>& known)
{
  Json extras = Json::object();
  for (auto it = object.begin(); it != object.end(); ++it) {
    bool recognized = false;
    for (const char* key : known) {
      if (it.key() == key) {
        recognized = true;
        break;
      }
    }
    if (!recognized)
      extras[it.key()] = it.value();
  }
  return extras;
}

inline void appendExtras(Json& object, const Json& extras)
{
  for (auto it = extras.begin(); it != extras.end(); ++it)
    object[it.key()] = it.value();
}

/// Canonical text form: 2-space indent, fixed key order supplied by the
/// serializers, shortest round-trip float representation, no trailing newline.
inline std::string canonicalText(const Json& value)
{
  return value.dump(2);
}

} // namespace chemdata::detail

#endif // CHEMDATA_JSON_UTIL_HPP
