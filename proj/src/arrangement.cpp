#include "toric/arrangement.hpp"

#include <stdexcept>

#include "toric/normal_forms.hpp"

namespace toric {

IntMatrix ToricArrangement::character_matrix() const {
  IntMatrix m(size(), rank);
  for (int i = 0; i < size(); ++i) {
    for (int j = 0; j < rank; ++j) m.at(i, j) = hypersurfaces[i].character[j];
  }
  return m;
}

std::vector<std::string> validate(const ToricArrangement& arr) {
  std::vector<std::string> errors;
  if (arr.rank < 0) errors.push_back("negative rank");
  for (int i = 0; i < arr.size(); ++i) {
    const Hypersurface& h = arr.hypersurfaces[i];
    if (int(h.character.size()) != arr.rank)
      errors.push_back("hypersurface " + std::to_string(i) + ": dimension mismatch");
    else if (content(h.character) == 0)
      errors.push_back("hypersurface " + std::to_string(i) + ": zero character");
    if (h.offset < 0 || h.offset >= 1)
      errors.push_back("hypersurface " + std::to_string(i) + ": offset not in [0, 1)");
    for (int j = 0; j < i; ++j)
      if (arr.hypersurfaces[j] == h)
        errors.push_back("hypersurface " + std::to_string(i) + ": duplicate of " +
                         std::to_string(j));
  }
  return errors;
}

ToricArrangement braid(int n) {
  if (n < 2) throw std::invalid_argument("braid requires n >= 2");
  ToricArrangement arr;
  arr.rank = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      IntVec chi(n, Int(0));
      chi[i] = 1;
      chi[j] = -1;
      arr.hypersurfaces.push_back({std::move(chi), Rat(0)});
    }
  return arr;
}

bool is_central(const ToricArrangement& arr) {
  for (const auto& h : arr.hypersurfaces)
    if (h.offset != 0) return false;
  return true;
}

bool is_primitive(const ToricArrangement& arr) {
  for (const auto& h : arr.hypersurfaces)
    if (content(h.character) != 1) return false;
  return true;
}

bool is_essential(const ToricArrangement& arr) {
  return arr.character_matrix().rank() == arr.rank;
}

Essentialization essentialize(const ToricArrangement& arr) {
  if (!is_central(arr)) throw std::invalid_argument("essentialize requires a central arrangement");
  IntMatrix basis = saturate(arr.character_matrix());
  int k = basis.rows();
  ToricArrangement out;
  out.rank = k;
  for (const auto& h : arr.hypersurfaces) {
    auto coords = solve_in_hnf_basis(basis, h.character);
    if (!coords) throw std::logic_error("character not in the saturation of the span");
    out.hypersurfaces.push_back({*coords, Rat(0)});
  }
  return {std::move(out), std::move(basis)};
}

}  // namespace toric
