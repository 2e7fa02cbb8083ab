/******************************************************************************

  This source file is part of the chemdata project.

  This source code is released under the 3-Clause BSD License, (see LICENSE).

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.

******************************************************************************/

#include "chemdata/elements.hpp"

#include "chemdata/errors.hpp"

#include <array>
#include <cctype>
#include <unordered_map>

namespace chemdata::elements {

namespace {

struct ElementRow {
  const char* symbol;
  const char* name;
};

// Indexed by atomic number - 1.
constexpr std::array<ElementRow, 118> kElements = { {
  { "H", "Hydrogen" },       { "He", "Helium" },
  { "Li", "Lithium" },       { "Be", "Beryllium" },
  { "B", "Boron" },          { "C", "Carbon" },
  { "N", "Nitrogen" },       { "O", "Oxygen" },
  { "F", "Fluorine" },       { "Ne", "Neon" },
  { "Na", "Sodium" },        { "Mg", "Magnesium" },
  { "Al", "Aluminum" },      { "Si", "Silicon" },
  { "P", "Phosphorus" },     { "S", "Sulfur" },
  { "Cl", "Chlorine" },      { "Ar", "Argon" },
  { "K", "Potassium" },      { "Ca", "Calcium" },
  { "Sc", "Scandium" },      { "Ti", "Titanium" },
  { "V", "Vanadium" },       { "Cr", "Chromium" },
  { "Mn", "Manganese" },     { "Fe", "Iron" },
  { "Co", "Cobalt" },        { "Ni", "Nickel" },
  { "Cu", "Copper" },        { "Zn", "Zinc" },
  { "Ga", "Gallium" },       { "Ge", "Germanium" },
  { "As", "Arsenic" },       { "Se", "Selenium" },
  { "Br", "Bromine" },       { "Kr", "Krypton" },
  { "Rb", "Rubidium" },      { "Sr", "Strontium" },
  { "Y", "Yttrium" },        { "Zr", "Zirconium" },
  { "Nb", "Niobium" },       { "Mo", "Molybdenum" },
  { "Tc", "Technetium" },    { "Ru", "Ruthenium" },
  { "Rh", "Rhodium" },       { "Pd", "Palladium" },
  { "Ag", "Silver" },        { "Cd", "Cadmium" },
  { "In", "Indium" },        { "Sn", "Tin" },
  { "Sb", "Antimony" },      { "Te", "Tellurium" },
  { "I", "Iodine" },         { "Xe", "Xenon" },
  { "Cs", "Cesium" },        { "Ba", "Barium" },
  { "La", "Lanthanum" },     { "Ce", "Cerium" },
  { "Pr", "Praseodymium" },  { "Nd", "Neodymium" },
  { "Pm", "Promethium" },    { "Sm", "Samarium" },
  { "Eu", "Europium" },      { "Gd", "Gadolinium" },
  { "Tb", "Terbium" },       { "Dy", "Dysprosium" },
  { "Ho", "Holmium" },       { "Er", "Erbium" },
  { "Tm", "Thulium" },       { "Yb", "Ytterbium" },
  { "Lu", "Lutetium" },      { "Hf", "Hafnium" },
  { "Ta", "Tantalum" },      { "W", "Tungsten" },
  { "Re", "Rhenium" },       { "Os", "Osmium" },
  { "Ir", "Iridium" },       { "Pt", "Platinum" },
  { "Au", "Gold" },          { "Hg", "Mercury" },
  { "Tl", "Thallium" },      { "Pb", "Lead" },
  { "Bi", "Bismuth" },       { "Po", "Polonium" },
  { "At", "Astatine" },      { "Rn", "Radon" },
  { "Fr", "Francium" },      { "Ra", "Radium" },
  { "Ac", "Actinium" },      { "Th", "Thorium" },
  { "Pa", "Protactinium" },  { "U", "Uranium" },
  { "Np", "Neptunium" },     { "Pu", "Plutonium" },
  { "Am", "Americium" },     { "Cm", "Curium" },
  { "Bk", "Berkelium" },     { "Cf", "Californium" },
  { "Es", "Einsteinium" },   { "Fm", "Fermium" },
  { "Md", "Mendelevium" },   { "No", "Nobelium" },
  { "Lr", "Lawrencium" },    { "Rf", "Rutherfordium" },
  { "Db", "Dubnium" },       { "Sg", "Seaborgium" },
  { "Bh", "Bohrium" },       { "Hs", "Hassium" },
  { "Mt", "Meitnerium" },    { "Ds", "Darmstadtium" },
  { "Rg", "Roentgenium" },   { "Cn", "Copernicium" },
  { "Nh", "Nihonium" },      { "Fl", "Flerovium" },
  { "Mc", "Moscovium" },     { "Lv", "Livermorium" },
  { "Ts", "Tennessine" },    { "Og", "Oganesson" },
} };

// Single-bond covalent radii in angstrom for elements 1..96; mirrors
// data/covalent_radii.csv (a unit test keeps the two in sync).
constexpr std::array<double, 96> kCovalentRadii = {
  0.31, 0.28, 1.28, 0.96, 0.84, 0.76, 0.71, 0.66, 0.57, 0.58, // 1-10
  1.66, 1.41, 1.21, 1.11, 1.07, 1.05, 1.02, 1.06, 2.03, 1.76, // 11-20
  1.70, 1.60, 1.53, 1.39, 1.61, 1.52, 1.50, 1.24, 1.32, 1.22, // 21-30
  1.22, 1.20, 1.19, 1.20, 1.20, 1.16, 2.20, 1.95, 1.90, 1.75, // 31-40
  1.64, 1.54, 1.47, 1.46, 1.42, 1.39, 1.45, 1.44, 1.42, 1.39, // 41-50
  1.39, 1.38, 1.39, 1.40, 2.44, 2.15, 2.07, 2.04, 2.03, 2.01, // 51-60
  1.99, 1.98, 1.98, 1.96, 1.94, 1.92, 1.92, 1.89, 1.90, 1.87, // 61-70
  1.87, 1.75, 1.70, 1.62, 1.51, 1.44, 1.41, 1.36, 1.36, 1.32, // 71-80
  1.45, 1.46, 1.48, 1.40, 1.50, 1.50, 2.60, 2.21, 2.15, 2.06, // 81-90
  2.00, 1.96, 1.90, 1.87, 1.80, 1.69                          // 91-96
};

std::string lowered(std::string_view text)
{
  std::string out(text);
  for (auto& c : out)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

const std::unordered_map<std::string, int>& symbolIndex()
{
  static const std::unordered_map<std::string, int> index = [] {
    std::unordered_map<std::string, int> map;
    for (int z = minAtomicNumber; z <= maxAtomicNumber; ++z)
      map.emplace(lowered(kElements[z - 1].symbol), z);
    return map;
  }();
  return index;
}

[[noreturn]] void throwUnknown(int number)
{
  throw Error(ErrorCode::UnknownElement,
              "atomic number " + std::to_string(number) +
                " is outside the periodic table");
}

} // namespace

bool isValidAtomicNumber(int number)
{
  return number >= minAtomicNumber && number <= maxAtomicNumber;
}

const std::string& symbol(int number)
{
  if (!isValidAtomicNumber(number))
    throwUnknown(number);
  static std::array<std::string, 118> cache = [] {
    std::array<std::string, 118> out;
    for (int z = minAtomicNumber; z <= maxAtomicNumber; ++z)
      out[z - 1] = kElements[z - 1].symbol;
    return out;
  }();
  return cache[number - 1];
}

const std::string& name(int number)
{
  if (!isValidAtomicNumber(number))
    throwUnknown(number);
  static std::array<std::string, 118> cache = [] {
    std::array<std::string, 118> out;
    for (int z = minAtomicNumber; z <= maxAtomicNumber; ++z)
      out[z - 1] = kElements[z - 1].name;
    return out;
  }();
  return cache[number - 1];
}

std::optional<int> numberFromSymbol(std::string_view symbol)
{
  const auto& index = symbolIndex();
  auto it = index.find(lowered(symbol));
  if (it == index.end())
    return std::nullopt;
  return it->second;
}

double covalentRadius(int number)
{
  if (number < minAtomicNumber || number > maxRadiusNumber)
    throwUnknown(number);
  return kCovalentRadii[number - 1];
}

} // namespace chemdata::elements
