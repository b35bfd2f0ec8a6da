#include "linfsym/blade.hpp"

#include <algorithm>
#include <stdexcept>

namespace linfsym {

Blade Blade::from_indices(std::span<const int> indices) {
  std::uint32_t mask = 0;
  int previous = -1;
  for (int i : indices) {
    if (i <= previous || i >= 32) throw std::invalid_argument("blade indices must be strictly increasing");
    mask |= std::uint32_t{1} << i;
    previous = i;
  }
  return Blade(mask);
}

std::vector<int> Blade::indices() const {
  std::vector<int> out;
  for (std::uint32_t rest = mask_; rest != 0; rest &= rest - 1) out.push_back(std::countr_zero(rest));
  return out;
}

bool lex_less(Blade a, Blade b) {
  auto ia = a.indices();
  auto ib = b.indices();
  return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

std::string render_blade(Blade b, const char* stem) {
  std::string out;
  for (int i : b.indices()) {
    if (!out.empty()) out += '^';
    out += stem + std::to_string(i + 1);
  }
  return out;
}

std::vector<Blade> blades_of_degree(int nvars, int degree) {
  std::vector<Blade> out;
  if (degree < 0 || degree > nvars) return out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << nvars); ++mask)
    if (std::popcount(mask) == degree) out.push_back(Blade::from_mask(mask));
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

}  // namespace linfsym
