/******************************************************************************

  This source file is part of the chemdata project.

  This source code is released under the 3-Clause BSD License, (see LICENSE).

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.

******************************************************************************/

#ifndef CHEMDATA_ELEMENTS_HPP
#define CHEMDATA_ELEMENTS_HPP

#include <optional>
#include <string>
#include <string_view>

namespace chemdata::elements {

inline constexpr int minAtomicNumber = 1;
inline constexpr int maxAtomicNumber = 118;

/// Highest atomic number with a covalent radius entry (data/covalent_radii.csv).
inline constexpr int maxRadiusNumber = 96;

bool isValidAtomicNumber(int number);

/// "O" for 8. Throws UnknownElement for numbers outside 1..118.
const std::string& symbol(int number);

/// "Oxygen" for 8. Throws UnknownElement for numbers outside 1..118.
const std::string& name(int number);

/// Atomic number for a symbol, matched case-insensitively ("o", "O" -> 8).
std::optional<int> numberFromSymbol(std::string_view symbol);

/// Single-bond covalent radius in angstrom. Throws UnknownElement for
/// numbers outside the 1..96 table.
double covalentRadius(int number);

} // namespace chemdata::elements

#endif // CHEMDATA_ELEMENTS_HPP
