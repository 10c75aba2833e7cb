#include "symentropy/vertex_set.hpp"

namespace symentropy {

bool lex_less(VertexSet a, VertexSet b) {
  std::uint64_t x = a.bits();
  std::uint64_t y = b.bits();
  while (x != 0 && y != 0) {
    int i = std::countr_zero(x);
    int j = std::countr_zero(y);
    if (i != j) return i < j;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first_member = true;
  for_each([&](Vertex v) {
    if (!first_member) out += ",";
    out += std::to_string(v);
    first_member = false;
  });
  return out + "}";
}

}  // namespace symentropy
