#include "psicalc/kclass.hpp"

namespace psicalc {

std::string twist_to_string(int twist) {
  if (twist % 2 == 0) return std::to_string(twist / 2);
  return std::to_string(twist) + "/2";
}

std::string ICClass::to_string(const char* symbol) const {
  return std::string(symbol) + "(" + stratum.to_string() + ";" + twist_to_string(twist) + ")";
}

namespace {

template <Basis B>
std::string render(const LinearClass<B>& x, const char* symbol) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, m] : x.terms()) {
    if (first) {
      if (m < 0) out += "-";
    } else {
      out += (m < 0) ? " - " : " + ";
    }
    long long a = m < 0 ? -m : m;
    if (a != 1) out += std::to_string(a) + "*";
    out += c.to_string(symbol);
    first = false;
  }
  return out;
}

}  // namespace

std::string to_string(const KClass& x) { return render(x, "IC"); }
std::string to_string(const ShKClass& x) { return render(x, "Sh"); }

}  // namespace psicalc
