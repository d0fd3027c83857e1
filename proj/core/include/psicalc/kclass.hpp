#pragma once

// Grothendieck-group elements on the special fiber.
//
// An ICClass labels the irreducible perverse constituent supported on the
// closure of a stratum J: the intermediate extension of the (shifted)
// constant sheaf on Y_J^0, Tate-twisted by twist/2. Twists are stored as
// integer numerators over 2; the weight of IC(J; a) is -a.
//
// Linear combinations are tagged by the basis their terms are read in:
// the IC basis (intermediate extensions), the shriek basis (classes of
// extensions by zero j_!) and the star basis (direct images j_*). Mixed
// arithmetic between different bases is a compile error; convert first.

#include <map>
#include <string>
#include <vector>

#include "psicalc/stratum.hpp"

namespace psicalc {

struct ICClass {
  Stratum stratum;
  int twist;  // numerator a of the Tate twist (a/2); weight is -a

  bool operator==(const ICClass& o) const {
    return stratum == o.stratum && twist == o.twist;
  }
  std::string to_string(const char* symbol = "IC") const;
};

struct ICClassLess {
  bool operator()(const ICClass& a, const ICClass& b) const {
    StratumLess less;
    if (less(a.stratum, b.stratum)) return true;
    if (less(b.stratum, a.stratum)) return false;
    return a.twist < b.twist;
  }
};

enum class Basis { IC, Shriek, Star };

template <Basis B>
class LinearClass {
 public:
  using TermMap = std::map<ICClass, long long, ICClassLess>;

  explicit LinearClass(int r) : r_(r) { check_branch_count(r); }

  int r() const { return r_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long long coeff(const ICClass& c) const {
    auto it = terms_.find(c);
    return it == terms_.end() ? 0 : it->second;
  }
  long long term_count() const {
    long long n = 0;
    for (const auto& [c, m] : terms_) n += (m > 0 ? m : -m);
    return n;
  }

  LinearClass& add(const ICClass& c, long long mult = 1) {
    if (c.stratum.r() != r_)
      throw std::domain_error("term stratum has branch count " +
                              std::to_string(c.stratum.r()) + ", class has " +
                              std::to_string(r_));
    if (mult == 0) return *this;
    auto [it, inserted] = terms_.try_emplace(c, 0);
    it->second += mult;
    if (it->second == 0) terms_.erase(it);
    return *this;
  }

  LinearClass& operator+=(const LinearClass& o) {
    require_same_r(o);
    for (const auto& [c, m] : o.terms_) add(c, m);
    return *this;
  }
  LinearClass& operator-=(const LinearClass& o) {
    require_same_r(o);
    for (const auto& [c, m] : o.terms_) add(c, -m);
    return *this;
  }
  LinearClass& operator*=(long long s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [c, m] : terms_) m *= s;
    return *this;
  }

  friend LinearClass operator+(LinearClass a, const LinearClass& b) { return a += b; }
  friend LinearClass operator-(LinearClass a, const LinearClass& b) { return a -= b; }
  friend LinearClass operator*(long long s, LinearClass a) { return a *= s; }

  bool operator==(const LinearClass& o) const {
    return r_ == o.r_ && terms_ == o.terms_;
  }
  bool operator!=(const LinearClass& o) const { return !(*this == o); }

 private:
  void require_same_r(const LinearClass& o) const {
    if (r_ != o.r_) throw std::domain_error("mismatched branch counts in class arithmetic");
  }
  int r_;
  TermMap terms_;
};

// IC-basis element of the Grothendieck group.
using KClass = LinearClass<Basis::IC>;
// Same data read in the shriek basis: a term (J, b) denotes the class of
// the extension by zero i_{J,*} j_{J,!} Lambda_J(b/2).
using ShKClass = LinearClass<Basis::Shriek>;

std::string to_string(const KClass& x);
std::string to_string(const ShKClass& x);

// Twist numerators rendered as reduced fractions over 2: 3 -> "3/2", 2 -> "1".
std::string twist_to_string(int twist);

}  // namespace psicalc
