/******************************************************************************

  This source file is part of the chemdata project.

  This source code is released under the 3-Clause BSD License, (see LICENSE).

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.

******************************************************************************/

#include "chemdata/errors.hpp"

namespace chemdata {

const char* errorCodeName(ErrorCode code)
{
  switch (code) {
    case ErrorCode::MalformedJson:
      return "MalformedJson";
    case ErrorCode::SchemaViolation:
      return "SchemaViolation";
    case ErrorCode::InvariantViolation:
      return "InvariantViolation";
    case ErrorCode::UnitUnknown:
      return "UnitUnknown";
    case ErrorCode::IncompatibleUnits:
      return "IncompatibleUnits";
    case ErrorCode::DuplicateId:
      return "DuplicateId";
    case ErrorCode::DanglingReference:
      return "DanglingReference";
    case ErrorCode::NoVibrations:
      return "NoVibrations";
    case ErrorCode::ModeOutOfRange:
      return "ModeOutOfRange";
    case ErrorCode::UnknownElement:
      return "UnknownElement";
    case ErrorCode::RowParseError:
      return "RowParseError";
    case ErrorCode::MissingField:
      return "MissingField";
    case ErrorCode::EmptyLog:
      return "EmptyLog";
    case ErrorCode::Unauthorized:
      return "Unauthorized";
    case ErrorCode::UnparseableDocument:
      return "UnparseableDocument";
    case ErrorCode::NotFound:
      return "NotFound";
    case ErrorCode::BadParameter:
      return "BadParameter";
    case ErrorCode::ConversionError:
      return "ConversionError";
    case ErrorCode::StorageFailure:
      return "StorageFailure";
    case ErrorCode::IoError:
      return "IoError";
  }
  return "Error";
}

} // namespace chemdata
