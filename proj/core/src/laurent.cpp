#include "clusteraut/laurent.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "clusteraut/error.hpp"

namespace clusteraut {

namespace {

void check_same_ring(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.ring() != b.ring() && a.ring()->names != b.ring()->names)
    throw InvalidArgument("Laurent polynomials live in different rings");
}

std::vector<int> add_exps(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

std::vector<int> sub_exps(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

bool divides(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

using TermMap = std::map<std::vector<int>, mpz_class>;

std::vector<Term> from_map(const TermMap& m) {
  std::vector<Term> out;
  out.reserve(m.size());
  for (const auto& [e, c] : m)
    if (c != 0) out.push_back(Term{e, c});
  return out;
}

// Shifts p by x^shift.
LaurentPoly shifted(const LaurentPoly& p, const std::vector<int>& shift) {
  std::vector<Term> terms = p.terms();
  for (auto& t : terms) t.exps = add_exps(t.exps, shift);
  return LaurentPoly::from_terms(p.ring(), std::move(terms));
}

std::vector<int> negate(std::vector<int> v) {
  for (auto& x : v) x = -x;
  return v;
}

// Exact polynomial division; both arguments have non-negative exponents.
LaurentPoly poly_divide(const LaurentPoly& a, const LaurentPoly& b) {
  const Term& lead = b.terms().back();
  std::map<std::vector<int>, mpz_class, std::greater<>> rem;
  for (const auto& t : a.terms()) rem.emplace(t.exps, t.coeff);
  TermMap quotient;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!divides(lead.exps, it->first) || !mpz_divisible_p(it->second.get_mpz_t(), lead.coeff.get_mpz_t()))
      throw InvariantViolation("non-exact Laurent division");
    const auto qe = sub_exps(it->first, lead.exps);
    const mpz_class qc = it->second / lead.coeff;
    quotient[qe] += qc;
    for (const auto& t : b.terms()) {
      auto e = add_exps(t.exps, qe);
      auto [pos, inserted] = rem.try_emplace(std::move(e), 0);
      pos->second -= qc * t.coeff;
      if (pos->second == 0) rem.erase(pos);
    }
  }
  return LaurentPoly::from_terms(a.ring(), from_map(quotient));
}

}  // namespace

RingPtr make_ring(std::size_t count) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) names.push_back("x" + std::to_string(i + 1));
  return make_ring(std::move(names));
}

RingPtr make_ring(std::vector<std::string> names) { return std::make_shared<const Ring>(Ring{std::move(names)}); }

LaurentPoly::LaurentPoly(RingPtr ring) : ring_(std::move(ring)) {}

LaurentPoly LaurentPoly::constant(RingPtr ring, const mpz_class& c) {
  const auto n = ring->size();
  return monomial(std::move(ring), std::vector<int>(n, 0), c);
}

LaurentPoly LaurentPoly::variable(RingPtr ring, std::size_t i) {
  if (i >= ring->size()) throw InvalidArgument("variable index out of range");
  std::vector<int> e(ring->size(), 0);
  e[i] = 1;
  return monomial(std::move(ring), std::move(e));
}

LaurentPoly LaurentPoly::monomial(RingPtr ring, std::vector<int> exps, const mpz_class& c) {
  if (exps.size() != ring->size()) throw InvalidArgument("exponent vector length differs from ring size");
  LaurentPoly p(std::move(ring));
  if (c != 0) p.terms_.push_back(Term{std::move(exps), c});
  return p;
}

LaurentPoly LaurentPoly::from_terms(RingPtr ring, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.exps.size() != ring->size()) throw InvalidArgument("exponent vector length differs from ring size");
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exps < b.exps; });
  LaurentPoly p(std::move(ring));
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exps == t.exps) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  check_same_ring(*this, o);
  LaurentPoly out(ring_);
  auto a = terms_.begin(), b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->exps < b->exps)) {
      out.terms_.push_back(*a++);
    } else if (a == terms_.end() || b->exps < a->exps) {
      out.terms_.push_back(*b++);
    } else {
      mpz_class c = a->coeff + b->coeff;
      if (c != 0) out.terms_.push_back(Term{a->exps, c});
      ++a;
      ++b;
    }
  }
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  check_same_ring(*this, o);
  if (is_monomial() || o.is_monomial()) {
    const auto& mono = is_monomial() ? terms_.front() : o.terms_.front();
    const auto& other = is_monomial() ? o : *this;
    LaurentPoly out(ring_);
    out.terms_.reserve(other.terms_.size());
    // Shifting by a monomial preserves the lexicographic order.
    for (const auto& t : other.terms_) out.terms_.push_back(Term{add_exps(t.exps, mono.exps), t.coeff * mono.coeff});
    return out;
  }
  TermMap acc;
  for (const auto& s : terms_)
    for (const auto& t : o.terms_) acc[add_exps(s.exps, t.exps)] += s.coeff * t.coeff;
  LaurentPoly out(ring_);
  out.terms_ = from_map(acc);
  return out;
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e < 0) {
    if (!is_monomial() || (terms_.front().coeff != 1 && terms_.front().coeff != -1))
      throw InvalidArgument("negative power of a non-unit");
    const auto& t = terms_.front();
    std::vector<int> exps = t.exps;
    for (auto& x : exps) x *= e;
    return monomial(ring_, std::move(exps), (-e) % 2 == 0 ? mpz_class(1) : t.coeff);
  }
  LaurentPoly result = constant(ring_, 1);
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

std::vector<int> LaurentPoly::min_exponents() const {
  std::vector<int> m(nvars(), 0);
  if (terms_.empty()) return m;
  m = terms_.front().exps;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], t.exps[i]);
  return m;
}

std::size_t LaurentPoly::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (const auto& t : terms_) {
    for (int e : t.exps) mix(static_cast<std::size_t>(e));
    const auto* z = t.coeff.get_mpz_t();
    mix(static_cast<std::size_t>(z->_mp_size));
    if (z->_mp_size != 0) mix(static_cast<std::size_t>(mpz_getlimbn(z, 0)));
  }
  return h;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].exps != b.terms_[i].exps || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return a.ring_ == b.ring_ || a.ring_->names == b.ring_->names;
}

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  check_same_ring(a, b);
  if (b.is_zero()) throw InvariantViolation("division by zero Laurent polynomial");
  if (a.is_zero()) return a;
  if (b.is_monomial()) {
    const auto& t = b.terms().front();
    std::vector<Term> terms;
    for (const auto& s : a.terms()) {
      if (!mpz_divisible_p(s.coeff.get_mpz_t(), t.coeff.get_mpz_t()))
        throw InvariantViolation("non-exact Laurent division");
      terms.push_back(Term{sub_exps(s.exps, t.exps), s.coeff / t.coeff});
    }
    return LaurentPoly::from_terms(a.ring(), std::move(terms));
  }
  const auto ma = a.min_exponents();
  const auto mb = b.min_exponents();
  const auto q = poly_divide(shifted(a, negate(ma)), shifted(b, negate(mb)));
  return shifted(q, sub_exps(ma, mb));
}

LaurentPoly lp_exchange(const LaurentPoly& plus, const LaurentPoly& minus, const LaurentPoly& old_var) {
  return exact_divide(plus + minus, old_var);
}

LaurentPoly substitute(const LaurentPoly& p, const std::vector<LaurentPoly>& images) {
  if (images.size() != p.nvars()) throw InvalidArgument("substitution needs one image per variable");
  if (images.empty()) throw InvalidArgument("substitution into an empty ring");
  const RingPtr& target = images.front().ring();
  for (const auto& img : images) check_same_ring(img, images.front());
  if (p.is_zero()) return LaurentPoly(target);

  const std::size_t n = images.size();
  // Negative powers of non-monomial images are cleared by a common denominator.
  std::vector<int> shift(n, 0);
  const auto mins = p.min_exponents();
  for (std::size_t v = 0; v < n; ++v)
    if (!images[v].is_monomial() && mins[v] < 0) shift[v] = -mins[v];

  std::vector<std::map<int, LaurentPoly>> cache(n);
  auto power = [&](std::size_t v, int e) -> const LaurentPoly& {
    auto it = cache[v].find(e);
    if (it == cache[v].end()) it = cache[v].emplace(e, images[v].pow(e)).first;
    return it->second;
  };

  bool all_monomial = std::all_of(images.begin(), images.end(), [](const LaurentPoly& q) { return q.is_monomial(); });
  if (all_monomial) {
    std::vector<Term> terms;
    terms.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
      std::vector<int> e(target->size(), 0);
      mpz_class c = t.coeff;
      for (std::size_t v = 0; v < n; ++v) {
        if (t.exps[v] == 0) continue;
        const auto& m = power(v, t.exps[v]).terms().front();
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += m.exps[i];
        c *= m.coeff;
      }
      terms.push_back(Term{std::move(e), c});
    }
    return LaurentPoly::from_terms(target, std::move(terms));
  }

  LaurentPoly numerator(target);
  for (const auto& t : p.terms()) {
    LaurentPoly term = LaurentPoly::constant(target, t.coeff);
    for (std::size_t v = 0; v < n; ++v) {
      const int e = t.exps[v] + shift[v];
      if (e != 0) term = term * power(v, e);
    }
    numerator = numerator + term;
  }
  LaurentPoly denominator = LaurentPoly::constant(target, 1);
  for (std::size_t v = 0; v < n; ++v)
    if (shift[v] > 0) denominator = denominator * power(v, shift[v]);
  return exact_divide(numerator, denominator);
}

std::vector<int> denominator_vector(const LaurentPoly& p, std::size_t n) {
  if (p.is_zero()) throw InvalidArgument("denominator vector of zero");
  if (n > p.nvars()) throw InvalidArgument("denominator vector: n exceeds ring size");
  const auto mins = p.min_exponents();
  std::vector<int> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = -mins[i];
  const bool has_constant = std::any_of(p.terms().begin(), p.terms().end(), [&](const Term& t) {
    for (std::size_t i = 0; i < n; ++i)
      if (t.exps[i] + d[i] != 0) return false;
    return true;
  });
  if (!has_constant) throw InvalidArgument("Laurent polynomial has no denominator-vector form");
  return d;
}

namespace {

std::string monomial_string(const Ring& ring, const std::vector<int>& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.names[i];
    if (e[i] != 1) out += '^' + std::to_string(e[i]);
  }
  return out;
}

}  // namespace

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  const auto& ring = *p.ring();
  std::vector<int> den(p.nvars());
  const auto mins = p.min_exponents();
  for (std::size_t i = 0; i < den.size(); ++i) den[i] = std::max(0, -mins[i]);

  std::vector<Term> num;
  for (const auto& t : p.terms()) num.push_back(Term{add_exps(t.exps, den), t.coeff});
  auto degree = [](const std::vector<int>& e) {
    long s = 0;
    for (int x : e) s += x;
    return s;
  };
  std::sort(num.begin(), num.end(), [&](const Term& a, const Term& b) {
    const auto da = degree(a.exps), db = degree(b.exps);
    if (da != db) return da < db;
    return a.exps > b.exps;
  });

  std::ostringstream os;
  for (std::size_t k = 0; k < num.size(); ++k) {
    const auto& t = num[k];
    mpz_class c = t.coeff;
    if (k > 0) {
      os << (c < 0 ? " - " : " + ");
      c = abs(c);
    } else if (c < 0) {
      os << '-';
      c = -c;
    }
    const auto mono = monomial_string(ring, t.exps);
    if (mono.empty()) os << c.get_str();
    else if (c == 1) os << mono;
    else os << c.get_str() << '*' << mono;
  }
  std::string numerator = os.str();
  const bool has_den = std::any_of(den.begin(), den.end(), [](int x) { return x != 0; });
  if (!has_den) return numerator;
  if (num.size() > 1) numerator = "(" + numerator + ")";
  const auto den_str = monomial_string(ring, den);
  const bool single = std::count_if(den.begin(), den.end(), [](int x) { return x != 0; }) == 1;
  return numerator + " / " + (single ? den_str : "(" + den_str + ")");
}

}  // namespace clusteraut
