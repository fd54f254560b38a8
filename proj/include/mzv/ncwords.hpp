// Words over a two-letter alphabet, noncommutative polynomials, derivations.
#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "mzv/exactnum.hpp"

namespace mzv {

enum class Genus { G0, G1 };  // letters (x0,x1) or (a,b)

// Packed word, first letter in the most significant used bit.
// Letter 0 is x0/a, letter 1 is x1/b (the counting letter).
struct Word {
  std::uint64_t bits = 0;
  std::uint32_t len = 0;

  static constexpr std::uint32_t kMaxLen = 64;

  static Word letter(int l) { return Word{(std::uint64_t)l, 1}; }
  static Word power(int l, unsigned n);
  static Word parse(const std::string& s, Genus g);

  int at(std::uint32_t i) const { return (int)((bits >> (len - 1 - i)) & 1u); }
  unsigned weight() const { return len; }
  unsigned count() const { return (unsigned)__builtin_popcountll(bits); }
  Word operator+(const Word& o) const;  // concatenation
  Word sub(std::uint32_t pos, std::uint32_t n) const;
  Word reversed() const;
  std::string str(Genus g) const;

  bool operator==(const Word& o) const { return len == o.len && bits == o.bits; }
  bool operator<(const Word& o) const { return len != o.len ? len < o.len : bits < o.bits; }
};

class NCPoly {
 public:
  using Map = std::map<Word, Rational>;

  explicit NCPoly(Genus g = Genus::G0) : g_(g) {}
  static NCPoly word(Genus g, const Word& w, const Rational& c = 1);
  static NCPoly letter(Genus g, int l) { return word(g, Word::letter(l)); }

  Genus genus() const { return g_; }
  const Map& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }
  Rational coeff(const Word& w) const;

  void add_term(const Word& w, const Rational& c);
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  NCPoly operator+(const NCPoly& o) const;
  NCPoly operator-(const NCPoly& o) const;
  NCPoly operator*(const Rational& c) const;
  NCPoly operator-() const;
  bool operator==(const NCPoly& o) const { return g_ == o.g_ && t_ == o.t_; }

  NCPoly by_weight(unsigned w) const;
  NCPoly by_count(unsigned r) const;
  NCPoly max_weight(unsigned w) const;
  NCPoly max_count(unsigned r) const;
  bool homogeneous_weight(unsigned* w) const;
  bool homogeneous_count(unsigned* r) const;

  std::string str() const;

 private:
  void check(const NCPoly& o) const;
  Genus g_;
  Map t_;
};

NCPoly concat(const NCPoly& p, const NCPoly& q);
NCPoly lie_bracket(const NCPoly& p, const NCPoly& q);
NCPoly ad_pow(const NCPoly& p, unsigned k, const NCPoly& q);
NCPoly star(const NCPoly& p);

// left-normed bracketing [..[[w1,w2],w3]..,wn]
NCPoly dynkin(const NCPoly& p);
// Dynkin criterion; throws on non-homogeneous input
bool is_lie(const NCPoly& p);

enum class Annihilates { None, Second, Commutator };

struct Derivation {
  Genus genus = Genus::G0;
  NCPoly first{Genus::G0};
  NCPoly second{Genus::G0};
  Annihilates tag = Annihilates::None;

  Derivation() = default;
  Derivation(Genus g, NCPoly img_first, NCPoly img_second, Annihilates t = Annihilates::None,
             unsigned check_cutoff = 0);
  static Derivation zero(Genus g) { return Derivation(g, NCPoly(g), NCPoly(g)); }

  bool is_zero() const { return first.is_zero() && second.is_zero(); }
  Derivation operator+(const Derivation& o) const;
  Derivation operator-(const Derivation& o) const;
  Derivation operator*(const Rational& c) const;
};

constexpr unsigned kNoCutoff = ~0u;

// Leibniz extension; terms of weight > weight_cutoff or counting degree > count_cutoff dropped
NCPoly apply_derivation(const Derivation& d, const NCPoly& p, unsigned weight_cutoff = kNoCutoff,
                        unsigned count_cutoff = kNoCutoff);

// d1 o d2 - d2 o d1 on the generators
Derivation derivation_bracket(const Derivation& d1, const Derivation& d2,
                              unsigned weight_cutoff = kNoCutoff, unsigned count_cutoff = kNoCutoff);

}  // namespace mzv
