/******************************************************************************

  This source file is part of the chemdata project.

  This source code is released under the 3-Clause BSD License, (see LICENSE).

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.

******************************************************************************/

#ifndef CHEMDATA_ERRORS_HPP
#define CHEMDATA_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chemdata {

enum class ErrorCode {
  MalformedJson,
  SchemaViolation,
  InvariantViolation,
  UnitUnknown,
  IncompatibleUnits,
  DuplicateId,
  DanglingReference,
  NoVibrations,
  ModeOutOfRange,
  UnknownElement,
  RowParseError,
  MissingField,
  EmptyLog,
  Unauthorized,
  UnparseableDocument,
  NotFound,
  BadParameter,
  ConversionError,
  StorageFailure,
  IoError
};

const char* errorCodeName(ErrorCode code);

/// A single failed rule, anchored to a path inside a document
/// (e.g. "bonds.order" or "calculations[1].calculationSetup.molecule").
struct Violation {
  std::string path;
  std::string rule;
  std::string message;

  bool operator==(const Violation&) const = default;

  std::string str() const { return path + ": " + rule + ": " + message; }
};

/// Error thrown by parsing, conversion, and service operations. Carries a
/// machine-readable code plus the document path the problem was found at.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& message, std::string path = "")
    : std::runtime_error(format(code, message, path)), m_code(code),
      m_path(std::move(path))
  {
  }

  Error(ErrorCode code, const std::string& message,
        std::vector<Violation> violations)
    : std::runtime_error(format(code, message,
                                violations.empty() ? std::string()
                                                   : violations.front().path)),
      m_code(code),
      m_path(violations.empty() ? std::string() : violations.front().path),
      m_violations(std::move(violations))
  {
  }

  ErrorCode code() const { return m_code; }
  const std::string& path() const { return m_path; }
  const std::vector<Violation>& violations() const { return m_violations; }

private:
  static std::string format(ErrorCode code, const std::string& message,
                            const std::string& path)
  {
    std::string text = errorCodeName(code);
    if (!path.empty())
      text += " at " + path;
    text += ": " + message;
    return text;
  }

  ErrorCode m_code;
  std::string m_path;
  std::vector<Violation> m_violations;
};

} // namespace chemdata

#endif // CHEMDATA_ERRORS_HPP
