#include "mzv/ncwords.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace mzv {

namespace {
const char* kLetters[2][2] = {{"0", "1"}, {"a", "b"}};
int gi(Genus g) { return g == Genus::G0 ? 0 : 1; }
}  // namespace

Word Word::power(int l, unsigned n) {
  if (n > kMaxLen) throw std::length_error("word too long");
  Word w;
  w.len = n;
  w.bits = l ? (n == 64 ? ~0ull : ((1ull << n) - 1)) : 0;
  return w;
}

Word Word::parse(const std::string& s, Genus g) {
  if (s.size() > kMaxLen) throw std::length_error("word too long");
  Word w;
  for (char c : s) {
    int l;
    if (c == kLetters[gi(g)][0][0]) l = 0;
    else if (c == kLetters[gi(g)][1][0]) l = 1;
    else throw std::invalid_argument(std::string("bad letter '") + c + "'");
    w.bits = (w.bits << 1) | (std::uint64_t)l;
    ++w.len;
  }
  return w;
}

Word Word::operator+(const Word& o) const {
  if (len + o.len > kMaxLen) throw std::length_error("word too long");
  Word w;
  w.len = len + o.len;
  w.bits = (o.len == 64 ? 0 : bits << o.len) | o.bits;
  return w;
}

Word Word::sub(std::uint32_t pos, std::uint32_t n) const {
  Word w;
  w.len = n;
  if (n == 0) return w;
  std::uint64_t shifted = bits >> (len - pos - n);
  w.bits = n == 64 ? shifted : (shifted & ((1ull << n) - 1));
  return w;
}

Word Word::reversed() const {
  Word w;
  w.len = len;
  for (std::uint32_t i = 0; i < len; ++i) w.bits |= (std::uint64_t)at(i) << i;
  return w;
}

std::string Word::str(Genus g) const {
  std::string s;
  for (std::uint32_t i = 0; i < len; ++i) s += kLetters[gi(g)][at(i)];
  return s;
}

NCPoly NCPoly::word(Genus g, const Word& w, const Rational& c) {
  NCPoly p(g);
  p.add_term(w, c);
  return p;
}

Rational NCPoly::coeff(const Word& w) const {
  auto it = t_.find(w);
  return it == t_.end() ? Rational(0) : it->second;
}

void NCPoly::add_term(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = t_.try_emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

void NCPoly::check(const NCPoly& o) const {
  if (g_ != o.g_) throw std::invalid_argument("alphabet mismatch");
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  check(o);
  for (const auto& [w, c] : o.t_) add_term(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  check(o);
  for (const auto& [w, c] : o.t_) add_term(w, -c);
  return *this;
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
  NCPoly r = *this;
  r += o;
  return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const {
  NCPoly r = *this;
  r -= o;
  return r;
}

NCPoly NCPoly::operator*(const Rational& c) const {
  NCPoly r(g_);
  if (c == 0) return r;
  for (const auto& [w, x] : t_) r.t_.emplace_hint(r.t_.end(), w, x * c);
  return r;
}

NCPoly NCPoly::operator-() const { return *this * Rational(-1); }

NCPoly NCPoly::by_weight(unsigned w) const {
  NCPoly r(g_);
  for (const auto& [k, c] : t_)
    if (k.len == w) r.t_.emplace_hint(r.t_.end(), k, c);
  return r;
}

NCPoly NCPoly::by_count(unsigned n) const {
  NCPoly r(g_);
  for (const auto& [k, c] : t_)
    if (k.count() == n) r.t_.emplace_hint(r.t_.end(), k, c);
  return r;
}

NCPoly NCPoly::max_weight(unsigned w) const {
  NCPoly r(g_);
  for (const auto& [k, c] : t_)
    if (k.len <= w) r.t_.emplace_hint(r.t_.end(), k, c);
  return r;
}

NCPoly NCPoly::max_count(unsigned n) const {
  NCPoly r(g_);
  for (const auto& [k, c] : t_)
    if (k.count() <= n) r.t_.emplace_hint(r.t_.end(), k, c);
  return r;
}

bool NCPoly::homogeneous_weight(unsigned* w) const {
  if (t_.empty()) return false;
  unsigned x = t_.begin()->first.len;
  for (const auto& kv : t_)
    if (kv.first.len != x) return false;
  if (w) *w = x;
  return true;
}

bool NCPoly::homogeneous_count(unsigned* r) const {
  if (t_.empty()) return false;
  unsigned x = t_.begin()->first.count();
  for (const auto& kv : t_)
    if (kv.first.count() != x) return false;
  if (r) *r = x;
  return true;
}

std::string NCPoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c) << "*" << (w.len ? w.str(g_) : std::string("1"));
  }
  return os.str();
}

NCPoly concat(const NCPoly& p, const NCPoly& q) {
  if (p.genus() != q.genus()) throw std::invalid_argument("alphabet mismatch");
  NCPoly r(p.genus());
  for (const auto& [u, a] : p.terms())
    for (const auto& [v, b] : q.terms()) r.add_term(u + v, a * b);
  return r;
}

NCPoly lie_bracket(const NCPoly& p, const NCPoly& q) { return concat(p, q) - concat(q, p); }

NCPoly ad_pow(const NCPoly& p, unsigned k, const NCPoly& q) {
  NCPoly r = q;
  for (unsigned i = 0; i < k; ++i) r = lie_bracket(p, r);
  return r;
}

NCPoly star(const NCPoly& p) {
  NCPoly r(p.genus());
  for (const auto& [w, c] : p.terms()) r.add_term(w.reversed(), (w.len % 2) ? Rational(-c) : c);
  return r;
}

NCPoly dynkin(const NCPoly& p) {
  // D(sum_l p_l l) = sum_l [D(p_l), l]
  Genus g = p.genus();
  NCPoly out(g);
  NCPoly split[2] = {NCPoly(g), NCPoly(g)};
  for (const auto& [w, c] : p.terms()) {
    if (w.len == 0) throw std::invalid_argument("dynkin: empty word");
    if (w.len == 1) {
      out.add_term(w, c);
      continue;
    }
    split[w.at(w.len - 1)].add_term(w.sub(0, w.len - 1), c);
  }
  for (int l = 0; l < 2; ++l) {
    if (split[l].is_zero()) continue;
    out += lie_bracket(dynkin(split[l]), NCPoly::letter(g, l));
  }
  return out;
}

bool is_lie(const NCPoly& p) {
  if (p.is_zero()) return true;
  unsigned n;
  if (!p.homogeneous_weight(&n)) throw std::invalid_argument("is_lie: input is not weight-homogeneous");
  if (n == 0) return false;
  return dynkin(p) == p * Rational(n);
}

Derivation::Derivation(Genus g, NCPoly img_first, NCPoly img_second, Annihilates t, unsigned check_cutoff)
    : genus(g), first(std::move(img_first)), second(std::move(img_second)), tag(t) {
  if (first.genus() != g || second.genus() != g) throw std::invalid_argument("derivation alphabet mismatch");
  if (tag == Annihilates::Second && !second.is_zero())
    throw std::invalid_argument("derivation tagged kills_second has nonzero second image");
  if (tag == Annihilates::Commutator) {
    NCPoly comm = lie_bracket(NCPoly::letter(g, 0), NCPoly::letter(g, 1));
    NCPoly img = apply_derivation(*this, comm, check_cutoff ? check_cutoff : kNoCutoff);
    if (!img.is_zero()) throw std::invalid_argument("derivation does not annihilate the commutator");
  }
}

Derivation Derivation::operator+(const Derivation& o) const {
  Derivation r = *this;
  r.first += o.first;
  r.second += o.second;
  if (tag != o.tag) r.tag = Annihilates::None;
  return r;
}

Derivation Derivation::operator-(const Derivation& o) const { return *this + o * Rational(-1); }

Derivation Derivation::operator*(const Rational& c) const {
  Derivation r = *this;
  r.first = first * c;
  r.second = second * c;
  return r;
}

NCPoly apply_derivation(const Derivation& d, const NCPoly& p, unsigned wcut, unsigned ccut) {
  if (d.genus != p.genus()) throw std::invalid_argument("alphabet mismatch");
  NCPoly r(p.genus());
  const NCPoly* img[2] = {&d.first, &d.second};
  for (const auto& [w, c] : p.terms()) {
    unsigned wc = w.count();
    for (std::uint32_t i = 0; i < w.len; ++i) {
      int l = w.at(i);
      const NCPoly& im = *img[l];
      if (im.is_zero()) continue;
      Word pre = w.sub(0, i), post = w.sub(i + 1, w.len - i - 1);
      unsigned rest = wc - (unsigned)l;
      for (const auto& [u, a] : im.terms()) {
        if (w.len - 1 + u.len > wcut) continue;
        if (rest + u.count() > ccut) continue;
        r.add_term(pre + u + post, c * a);
      }
    }
  }
  return r;
}

Derivation derivation_bracket(const Derivation& d1, const Derivation& d2, unsigned wcut, unsigned ccut) {
  if (d1.genus != d2.genus) throw std::invalid_argument("alphabet mismatch");
  NCPoly f = apply_derivation(d1, d2.first, wcut, ccut) - apply_derivation(d2, d1.first, wcut, ccut);
  NCPoly s = apply_derivation(d1, d2.second, wcut, ccut) - apply_derivation(d2, d1.second, wcut, ccut);
  Annihilates t = (d1.tag == d2.tag) ? d1.tag : Annihilates::None;
  Derivation r;
  r.genus = d1.genus;
  r.first = std::move(f);
  r.second = std::move(s);
  r.tag = t;
  return r;
}

}  // namespace mzv
