// Prints how far each S(a) sits above the Wilf bound, relative to F(S(a)) + 1.

#include "fibsg/fibsg.hpp"

#include <iostream>

int main() {
  for (std::size_t a = 3; a <= 40; ++a) {
    const auto s = fibsg::family_summary(a);
    const double ratio = static_cast<double>(s.wilf_slack) / static_cast<double>(s.frobenius + 1);
    std::cout << "a=" << a << " e=" << s.embedding_dimension << " slack=" << s.wilf_slack
              << " slack/(F+1)=" << ratio << '\n';
  }
}
