/******************************************************************************

  This source file is part of the chemdata project.

  This source code is released under the 3-Clause BSD License, (see LICENSE).

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.

******************************************************************************/

#ifndef CHEMDATA_UNITS_HPP
#define CHEMDATA_UNITS_HPP

#include <string>
#include <vector>

namespace chemdata {

/// CODATA 2014 bohr radius in angstrom; the one registered length conversion.
inline constexpr double kBohrInAngstrom = 0.52917721067;

/// A numeric value (scalar or vector) paired with an explicit units label.
/// Every numeric leaf in an ExtendedChem document is one of these.
struct Quantity {
  std::vector<double> value; // scalar stored as a single element
  std::string units;
  bool scalar = true; // scalars and vectors serialize differently

  Quantity() = default;
  Quantity(double v, std::string u)
    : value{ v }, units(std::move(u)), scalar(true)
  {
  }
  Quantity(std::vector<double> v, std::string u)
    : value(std::move(v)), units(std::move(u)), scalar(false)
  {
  }

  bool operator==(const Quantity&) const = default;
};

namespace units {

/// Registered labels: "bohr", "angstrom", "atomic units", "cm-1", "debye".
bool isRegistered(const std::string& units);

const std::vector<std::string>& registered();

/// Scale a quantity into target units. Length units (bohr, angstrom)
/// interconvert; every other registered unit converts only to itself.
/// Throws UnitUnknown or IncompatibleUnits.
Quantity convert(const Quantity& quantity, const std::string& targetUnits);

/// Conversion factor such that value_in_target = factor * value_in_source.
double conversionFactor(const std::string& sourceUnits,
                        const std::string& targetUnits);

} // namespace units
} // namespace chemdata

#endif // CHEMDATA_UNITS_HPP
