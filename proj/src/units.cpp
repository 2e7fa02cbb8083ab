/******************************************************************************

  This source file is part of the chemdata project.

  This source code is released under the 3-Clause BSD License, (see LICENSE).

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.

******************************************************************************/

#include "chemdata/units.hpp"

#include "chemdata/errors.hpp"

#include <algorithm>
#include <array>

namespace chemdata::units {

namespace {

enum class Dimension { Length, Energy, WaveNumber, DipoleMoment };

struct UnitRow {
  const char* label;
  Dimension dimension;
  double toBase; // value in the dimension's base unit (angstrom for length)
};

// Closed registry. "atomic units" labels moments, energies and shieldings in
// the object format; it has no registered conversion target besides itself.
constexpr std::array<UnitRow, 5> kRegistry = { {
  { "bohr", Dimension::Length, kBohrInAngstrom },
  { "angstrom", Dimension::Length, 1.0 },
  { "atomic units", Dimension::Energy, 1.0 },
  { "cm-1", Dimension::WaveNumber, 1.0 },
  { "debye", Dimension::DipoleMoment, 1.0 },
} };

const UnitRow* find(const std::string& units)
{
  for (const auto& row : kRegistry) {
    if (units == row.label)
      return &row;
  }
  return nullptr;
}

const UnitRow& require(const std::string& units)
{
  if (const UnitRow* row = find(units))
    return *row;
  throw Error(ErrorCode::UnitUnknown,
              "units label \"" + units + "\" is not registered");
}

} // namespace

bool isRegistered(const std::string& units)
{
  return find(units) != nullptr;
}

const std::vector<std::string>& registered()
{
  static const std::vector<std::string> labels = [] {
    std::vector<std::string> out;
    for (const auto& row : kRegistry)
      out.emplace_back(row.label);
    return out;
  }();
  return labels;
}

double conversionFactor(const std::string& sourceUnits,
                        const std::string& targetUnits)
{
  const UnitRow& source = require(sourceUnits);
  const UnitRow& target = require(targetUnits);
  if (sourceUnits == targetUnits)
    return 1.0;
  if (source.dimension != target.dimension ||
      source.dimension != Dimension::Length) {
    throw Error(ErrorCode::IncompatibleUnits,
                "no conversion registered from \"" + sourceUnits + "\" to \"" +
                  targetUnits + "\"");
  }
  return source.toBase / target.toBase;
}

Quantity convert(const Quantity& quantity, const std::string& targetUnits)
{
  const double factor = conversionFactor(quantity.units, targetUnits);
  Quantity out = quantity;
  out.units = targetUnits;
  if (factor != 1.0) {
    for (auto& v : out.value)
      v *= factor;
  }
  return out;
}

} // namespace chemdata::units
