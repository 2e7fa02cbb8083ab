/******************************************************************************

  This source file is part of the chemdata project.

  This source code is released under the 3-Clause BSD License, (see LICENSE).

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.

******************************************************************************/

#ifndef CHEMDATA_JSON_HPP
#define CHEMDATA_JSON_HPP

#include <json.hpp>

namespace chemdata {

// Insertion-ordered JSON tree. Both formats promise that unknown keys are
// preserved verbatim across a parse/serialize round trip, so parsed extras
// keep their original key order.
using Json = nlohmann::ordered_json;

} // namespace chemdata

#endif // CHEMDATA_JSON_HPP
