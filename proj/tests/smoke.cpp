#include "focklat/integral_ops.hpp"
#include "focklat/surface.hpp"
#include "focklat/io.hpp"
#include <iostream>
int main() {
  using namespace focklat;
  ModelPtr m = preset_model("P2");
  std::cout << to_json(full_basis(m, 1)).dump() << "\n";
  std::cout << rational_to_string(full_gram_det(m, 1)) << "\n";
  std::cout << rational_to_string(mid_gram_det(m, 2)) << "\n";
  std::cout << monomial_gram_det(4) << "\n";
  return 0;
}
