#include "matgen/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <tuple>

namespace matgen {

const char* err_name(Err e) {
  switch (e) {
    case Err::DivisionByZero: return "DivisionByZero";
    case Err::FieldMismatch: return "FieldMismatch";
    case Err::InfiniteField: return "InfiniteField";
    case Err::DimensionMismatch: return "DimensionMismatch";
    case Err::AmbientMismatch: return "AmbientMismatch";
    case Err::NotSquare: return "NotSquare";
    case Err::NotGenerating: return "NotGenerating";
    case Err::NotIrredundant: return "NotIrredundant";
    case Err::NotSplit: return "NotSplit";
    case Err::Inconclusive: return "Inconclusive";
    case Err::CapExceeded: return "CapExceeded";
    case Err::BadSize: return "BadSize";
    case Err::UnsupportedField: return "UnsupportedField";
    case Err::DegenerateAlpha: return "DegenerateAlpha";
    case Err::SingularConjugator: return "SingularConjugator";
    case Err::ZeroScale: return "ZeroScale";
    case Err::CentralizerTooBig: return "CentralizerTooBig";
    case Err::InternalPatternFailure: return "InternalPatternFailure";
    case Err::BadInput: return "BadInput";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

Rat make_rat(const Int& num, const Int& den) {
  require(den != 0, Err::DivisionByZero, "rational with zero denominator");
  return Rat(num) / Rat(den);
}

namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::int64_t mod_pos(std::int64_t v, std::int64_t p) {
  std::int64_t r = v % p;
  return r < 0 ? r + p : r;
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
  // extended Euclid
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
    tmp = r - q * nr; r = nr; nr = tmp;
  }
  require(r == 1, Err::DivisionByZero, "element not invertible mod p");
  return mod_pos(t, p);
}

// Conway polynomials for the small fields the suites use, keyed by (p, k).
// Stored as the non-leading coefficients of the monic modulus, low to high.
const std::map<std::pair<std::int64_t, int>, std::vector<std::int64_t>> kConwayTable = {
    {{2, 2}, {1, 1}},      {{2, 3}, {1, 1, 0}},
    {{3, 2}, {2, 2}},      {{3, 3}, {1, 2, 0}},
    {{5, 2}, {2, 4}},      {{5, 3}, {3, 3, 0}},
    {{7, 2}, {3, 6}},      {{7, 3}, {4, 0, 6}},
    {{11, 2}, {2, 7}},     {{13, 2}, {2, 12}},
};

// For degree <= 3, irreducible over GF(p) <=> no root in GF(p).
bool modulus_irreducible(std::int64_t p, const std::vector<std::int64_t>& low) {
  int k = static_cast<int>(low.size());
  for (std::int64_t x = 0; x < p; ++x) {
    std::int64_t acc = 1; // x^k
    for (int i = 0; i < k; ++i) acc = mod_pos(acc * x, p);
    std::int64_t xp = 1;
    for (int i = 0; i < k; ++i) {
      acc = mod_pos(acc + low[static_cast<std::size_t>(i)] * xp, p);
      xp = mod_pos(xp * x, p);
    }
    if (acc == 0) return false;
  }
  return true;
}

std::vector<std::int64_t> pick_modulus(std::int64_t p, int k) {
  auto it = kConwayTable.find({p, k});
  if (it != kConwayTable.end()) {
    require(modulus_irreducible(p, it->second), Err::Internal, "bad modulus table entry");
    return it->second;
  }
  // deterministic fallback: first irreducible monic in index order
  std::int64_t total = 1;
  for (int i = 0; i < k; ++i) total *= p;
  for (std::int64_t idx = 0; idx < total; ++idx) {
    std::vector<std::int64_t> low(static_cast<std::size_t>(k));
    std::int64_t t = idx;
    for (int i = 0; i < k; ++i) { low[static_cast<std::size_t>(i)] = t % p; t /= p; }
    if (modulus_irreducible(p, low)) return low;
  }
  fail(Err::Internal, "no irreducible modulus found");
}

struct FieldRegistry {
  std::mutex mu;
  std::map<std::tuple<int, std::int64_t, int>, std::unique_ptr<FieldSpec>> pool;

  Field get(FieldKind kind, std::int64_t p, int k) {
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(static_cast<int>(kind), p, k);
    auto it = pool.find(key);
    if (it != pool.end()) return it->second.get();
    auto spec = std::make_unique<FieldSpec>();
    spec->kind = kind;
    spec->p = p;
    spec->k = k;
    if (kind == FieldKind::Extension) spec->mod = pick_modulus(p, k);
    Field f = spec.get();
    pool.emplace(key, std::move(spec));
    return f;
  }
};

FieldRegistry& registry() {
  static FieldRegistry r;
  return r;
}

} // namespace

std::int64_t FieldSpec::cardinality() const {
  require(finite(), Err::InfiniteField, "rationals have no cardinality");
  std::int64_t c = 1;
  for (int i = 0; i < k; ++i) c *= p;
  return c;
}

std::string FieldSpec::to_string() const {
  if (kind == FieldKind::Rationals) return "qq";
  if (kind == FieldKind::Prime) return "gf:" + std::to_string(p);
  return "gf:" + std::to_string(p) + "^" + std::to_string(k);
}

Field rationals() { return registry().get(FieldKind::Rationals, 0, 1); }

Field prime_field(std::int64_t p) {
  require(p >= 2 && p < (std::int64_t{1} << 31), Err::BadInput, "characteristic out of range");
  require(is_prime(p), Err::BadInput, "characteristic must be prime");
  return registry().get(FieldKind::Prime, p, 1);
}

Field extension_field(std::int64_t p, int k) {
  if (k == 1) return prime_field(p);
  require(k >= 1 && k <= 3, Err::UnsupportedField, "extension degree must be <= 3");
  require(p >= 2 && p < 1'000'000, Err::BadInput, "extension characteristic out of range");
  require(is_prime(p), Err::BadInput, "characteristic must be prime");
  return registry().get(FieldKind::Extension, p, k);
}

Field parse_field(const std::string& s) {
  if (s == "qq") return rationals();
  if (s.rfind("gf:", 0) == 0) {
    std::string body = s.substr(3);
    auto caret = body.find('^');
    try {
      if (caret == std::string::npos) return prime_field(std::stoll(body));
      std::int64_t p = std::stoll(body.substr(0, caret));
      int k = std::stoi(body.substr(caret + 1));
      return extension_field(p, k);
    } catch (const std::invalid_argument&) {
      fail(Err::BadInput, "bad field spec '" + s + "'");
    } catch (const std::out_of_range&) {
      fail(Err::BadInput, "bad field spec '" + s + "'");
    }
  }
  fail(Err::BadInput, "bad field spec '" + s + "' (want qq | gf:p | gf:p^k)");
}

// --- Scalar ---

Scalar::Scalar(Field f, std::int64_t value) : f_(f) {
  switch (f->kind) {
    case FieldKind::Prime: v_ = mod_pos(value, f->p); break;
    case FieldKind::Extension: {
      ExtCoeffs c{0, 0, 0};
      c[0] = mod_pos(value, f->p);
      v_ = c;
      break;
    }
    case FieldKind::Rationals: v_ = Rat(value); break;
  }
}

Scalar::Scalar(Field f, const Rat& value) : f_(f) {
  require(f->kind == FieldKind::Rationals, Err::FieldMismatch, "rational value in finite field");
  v_ = value;
}

Scalar ext_make(Field f, const std::array<std::int64_t, 3>& c) {
  Scalar s;
  s.f_ = f;
  s.v_ = c;
  return s;
}

Scalar Scalar::zero(Field f) { return Scalar(f, 0); }
Scalar Scalar::one(Field f) { return Scalar(f, 1); }

Scalar Scalar::from_index(Field f, std::int64_t idx) {
  require(f->finite(), Err::InfiniteField, "from_index needs a finite field");
  require(idx >= 0 && idx < f->cardinality(), Err::BadInput, "scalar index out of range");
  if (f->kind == FieldKind::Prime) return Scalar(f, idx);
  ExtCoeffs c{0, 0, 0};
  for (int i = 0; i < f->k; ++i) { c[static_cast<std::size_t>(i)] = idx % f->p; idx /= f->p; }
  return ext_make(f, c);
}

bool Scalar::is_zero() const {
  switch (f_->kind) {
    case FieldKind::Prime: return std::get<std::int64_t>(v_) == 0;
    case FieldKind::Extension: {
      const auto& c = ext();
      return c[0] == 0 && c[1] == 0 && c[2] == 0;
    }
    case FieldKind::Rationals: return std::get<Rat>(v_) == 0;
  }
  return false;
}

bool Scalar::is_one() const {
  switch (f_->kind) {
    case FieldKind::Prime: return std::get<std::int64_t>(v_) == 1;
    case FieldKind::Extension: {
      const auto& c = ext();
      return c[0] == 1 && c[1] == 0 && c[2] == 0;
    }
    case FieldKind::Rationals: return std::get<Rat>(v_) == 1;
  }
  return false;
}

std::int64_t Scalar::index() const {
  require(f_->finite(), Err::InfiniteField, "index needs a finite field");
  if (f_->kind == FieldKind::Prime) return std::get<std::int64_t>(v_);
  const auto& c = ext();
  std::int64_t idx = 0;
  for (int i = f_->k - 1; i >= 0; --i) idx = idx * f_->p + c[static_cast<std::size_t>(i)];
  return idx;
}

std::int64_t Scalar::residue() const {
  require(f_->finite(), Err::InfiniteField, "residue needs a finite field");
  if (f_->kind == FieldKind::Prime) return std::get<std::int64_t>(v_);
  return ext()[0];
}

const Rat& Scalar::rat() const { return std::get<Rat>(v_); }

namespace {
void check_same_field(const Scalar& a, const Scalar& b) {
  require(a.field() == b.field(), Err::FieldMismatch, "operands from different fields");
}
} // namespace

Scalar Scalar::operator+(const Scalar& o) const {
  check_same_field(*this, o);
  switch (f_->kind) {
    case FieldKind::Prime:
      return Scalar(f_, std::get<std::int64_t>(v_) + std::get<std::int64_t>(o.v_));
    case FieldKind::Extension: {
      ExtCoeffs c;
      for (int i = 0; i < 3; ++i)
        c[static_cast<std::size_t>(i)] =
            mod_pos(ext()[static_cast<std::size_t>(i)] + o.ext()[static_cast<std::size_t>(i)], f_->p);
      return ext_make(f_, c);
    }
    case FieldKind::Rationals: return Scalar(f_, Rat(rat() + o.rat()));
  }
  fail(Err::Internal, "bad field kind");
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
  switch (f_->kind) {
    case FieldKind::Prime: return Scalar(f_, -std::get<std::int64_t>(v_));
    case FieldKind::Extension: {
      ExtCoeffs c;
      for (int i = 0; i < 3; ++i)
        c[static_cast<std::size_t>(i)] = mod_pos(-ext()[static_cast<std::size_t>(i)], f_->p);
      return ext_make(f_, c);
    }
    case FieldKind::Rationals: return Scalar(f_, Rat(-rat()));
  }
  fail(Err::Internal, "bad field kind");
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same_field(*this, o);
  switch (f_->kind) {
    case FieldKind::Prime:
      return Scalar(f_, mod_pos(std::get<std::int64_t>(v_) * std::get<std::int64_t>(o.v_), f_->p));
    case FieldKind::Extension: {
      const std::int64_t p = f_->p;
      const int k = f_->k;
      std::array<std::int64_t, 5> prod{0, 0, 0, 0, 0};
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          prod[static_cast<std::size_t>(i + j)] =
              mod_pos(prod[static_cast<std::size_t>(i + j)] +
                          ext()[static_cast<std::size_t>(i)] * o.ext()[static_cast<std::size_t>(j)],
                      p);
      for (int d = 2 * k - 2; d >= k; --d) {
        std::int64_t c = prod[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        prod[static_cast<std::size_t>(d)] = 0;
        // x^d = x^{d-k} * (-mod)
        for (int i = 0; i < k; ++i)
          prod[static_cast<std::size_t>(d - k + i)] =
              mod_pos(prod[static_cast<std::size_t>(d - k + i)] - c * f_->mod[static_cast<std::size_t>(i)], p);
      }
      ExtCoeffs c{prod[0], prod[1], prod[2]};
      return ext_make(f_, c);
    }
    case FieldKind::Rationals: return Scalar(f_, Rat(rat() * o.rat()));
  }
  fail(Err::Internal, "bad field kind");
}

Scalar Scalar::inverse() const {
  require(!is_zero(), Err::DivisionByZero, "inverse of zero");
  switch (f_->kind) {
    case FieldKind::Prime: return Scalar(f_, mod_inv(std::get<std::int64_t>(v_), f_->p));
    case FieldKind::Extension: {
      // extended Euclid in GF(p)[x] against the modulus
      const std::int64_t p = f_->p;
      const int k = f_->k;
      std::vector<std::int64_t> r0(static_cast<std::size_t>(k) + 1), r1(ext().begin(), ext().begin() + k);
      for (int i = 0; i < k; ++i) r0[static_cast<std::size_t>(i)] = f_->mod[static_cast<std::size_t>(i)];
      r0[static_cast<std::size_t>(k)] = 1;
      std::vector<std::int64_t> s0{0}, s1{1};
      auto deg = [](const std::vector<std::int64_t>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
          if (v[static_cast<std::size_t>(i)] != 0) return i;
        return -1;
      };
      while (deg(r1) >= 0) {
        // divide r0 by r1
        std::vector<std::int64_t> rem = r0, q(static_cast<std::size_t>(k) + 1, 0);
        int d1 = deg(r1);
        std::int64_t lead_inv = mod_inv(r1[static_cast<std::size_t>(d1)], p);
        for (int d = deg(rem); d >= d1; d = deg(rem)) {
          std::int64_t c = mod_pos(rem[static_cast<std::size_t>(d)] * lead_inv, p);
          q[static_cast<std::size_t>(d - d1)] = c;
          for (int i = 0; i <= d1; ++i)
            rem[static_cast<std::size_t>(d - d1 + i)] =
                mod_pos(rem[static_cast<std::size_t>(d - d1 + i)] - c * r1[static_cast<std::size_t>(i)], p);
        }
        // s_next = s0 - q*s1
        std::vector<std::int64_t> snext(std::max(s0.size(), q.size() + s1.size()), 0);
        for (std::size_t i = 0; i < s0.size(); ++i) snext[i] = s0[i];
        for (std::size_t i = 0; i < q.size(); ++i)
          for (std::size_t j = 0; j < s1.size(); ++j)
            snext[i + j] = mod_pos(snext[i + j] - q[i] * s1[j], p);
        r0 = r1; r1 = rem; s0 = s1; s1 = snext;
      }
      int d0 = deg(r0);
      require(d0 == 0, Err::Internal, "modulus not irreducible");
      std::int64_t scale = mod_inv(r0[0], p);
      ExtCoeffs c{0, 0, 0};
      for (int i = 0; i < k && i < static_cast<int>(s0.size()); ++i)
        c[static_cast<std::size_t>(i)] = mod_pos(s0[static_cast<std::size_t>(i)] * scale, p);
      return ext_make(f_, c);
    }
    case FieldKind::Rationals: return Scalar(f_, Rat(Rat(1) / rat()));
  }
  fail(Err::Internal, "bad field kind");
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same_field(*this, o);
  return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
  if (f_ != o.f_) return false;
  return v_ == o.v_;
}

bool Scalar::less_than(const Scalar& o) const {
  check_same_field(*this, o);
  if (f_->finite()) return index() < o.index();
  return rat() < o.rat();
}

std::string Scalar::to_string() const {
  switch (f_->kind) {
    case FieldKind::Prime: return std::to_string(std::get<std::int64_t>(v_));
    case FieldKind::Extension: {
      std::ostringstream os;
      os << "[";
      for (int i = 0; i < f_->k; ++i) {
        if (i) os << ",";
        os << ext()[static_cast<std::size_t>(i)];
      }
      os << "]";
      return os.str();
    }
    case FieldKind::Rationals: {
      std::ostringstream os;
      os << rat();
      return os.str();
    }
  }
  return "?";
}

Scalar field_arith(const std::string& op, const Scalar& a, const Scalar* b) {
  auto need_b = [&]() -> const Scalar& {
    require(b != nullptr, Err::BadInput, "operation '" + op + "' needs two operands");
    return *b;
  };
  if (op == "add") return a + need_b();
  if (op == "sub") return a - need_b();
  if (op == "mul") return a * need_b();
  if (op == "div") return a / need_b();
  if (op == "neg") return -a;
  if (op == "inv") return a.inverse();
  fail(Err::BadInput, "unknown field op '" + op + "'");
}

std::vector<Scalar> enumerate_field(Field f) {
  require(f->finite(), Err::InfiniteField, "cannot enumerate the rationals");
  std::int64_t q = f->cardinality();
  std::vector<Scalar> out;
  out.reserve(static_cast<std::size_t>(q));
  for (std::int64_t i = 0; i < q; ++i) out.push_back(Scalar::from_index(f, i));
  return out;
}

Scalar embed_scalar(const Scalar& s, Field target) {
  if (s.field() == target) return s;
  require(s.field()->kind == FieldKind::Prime && target->kind == FieldKind::Extension &&
              s.field()->p == target->p,
          Err::FieldMismatch, "embedding only defined for GF(p) -> GF(p^k)");
  return Scalar(target, s.residue());
}

Scalar parse_scalar(const std::string& s, Field f) {
  require(!s.empty(), Err::BadInput, "empty scalar");
  try {
    if (s.front() == '[') {
      require(f->kind == FieldKind::Extension, Err::BadInput,
              "coefficient-list scalar needs an extension field");
      require(s.back() == ']', Err::BadInput, "unterminated coefficient list");
      std::array<std::int64_t, 3> c{0, 0, 0};
      std::string body = s.substr(1, s.size() - 2);
      std::istringstream is(body);
      std::string tok;
      int i = 0;
      while (std::getline(is, tok, ',')) {
        require(i < f->k, Err::BadInput, "too many coefficients for degree-" + std::to_string(f->k) + " extension");
        std::int64_t val = std::stoll(tok);
        c[static_cast<std::size_t>(i++)] = mod_pos(val, f->p);
      }
      return ext_make(f, c);
    }
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      Int num(s.substr(0, slash));
      Int den(s.substr(slash + 1));
      if (f->kind == FieldKind::Rationals) return Scalar(f, make_rat(num, den));
      // a/b in a finite field means a * b^{-1}
      std::int64_t nm = static_cast<std::int64_t>(num % f->p);
      std::int64_t dn = static_cast<std::int64_t>(den % f->p);
      return Scalar(f, nm) / Scalar(f, dn);
    }
    if (f->kind == FieldKind::Rationals) return Scalar(f, Rat(Int(s)));
    return Scalar(f, std::stoll(s));
  } catch (const MatgenError&) {
    throw;
  } catch (const std::exception&) {
    fail(Err::BadInput, "bad scalar '" + s + "'");
  }
}

Scalar random_scalar(Field f, std::mt19937_64& rng) {
  require(f->finite(), Err::InfiniteField, "random_scalar needs a finite field");
  std::uniform_int_distribution<std::int64_t> dist(0, f->cardinality() - 1);
  return Scalar::from_index(f, dist(rng));
}

// --- polynomials ---

Poly poly_trim(Poly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

int poly_degree(const Poly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (!p[static_cast<std::size_t>(i)].is_zero()) return i;
  return -1;
}

Poly poly_add(const Poly& a, const Poly& b) {
  Poly out = a.size() >= b.size() ? a : b;
  const Poly& small = a.size() >= b.size() ? b : a;
  for (std::size_t i = 0; i < small.size(); ++i) out[i] += small[i];
  return poly_trim(std::move(out));
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly nb;
  nb.reserve(b.size());
  for (const auto& c : b) nb.push_back(-c);
  return poly_add(a, nb);
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Field f = a.front().field();
  Poly out(a.size() + b.size() - 1, Scalar::zero(f));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] += a[i] * b[j];
  return poly_trim(std::move(out));
}

Scalar poly_eval(const Poly& p, const Scalar& x) {
  Scalar acc = Scalar::zero(x.field());
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly poly_div_linear(const Poly& p, const Scalar& r) {
  // synthetic division by (x - r)
  require(!p.empty(), Err::BadInput, "dividing empty polynomial");
  Field f = r.field();
  Poly q(p.size() - 1, Scalar::zero(f));
  Scalar carry = Scalar::zero(f);
  for (int i = static_cast<int>(p.size()) - 1; i >= 1; --i) {
    carry = p[static_cast<std::size_t>(i)] + carry * r;
    q[static_cast<std::size_t>(i - 1)] = carry;
  }
  Scalar rem = p[0] + carry * r;
  require(rem.is_zero(), Err::Internal, "nonzero remainder in linear division");
  return q;
}

namespace {

// divisors of |v|, by trial division (desk-scale inputs)
std::vector<Int> divisors_of(Int v) {
  if (v < 0) v = -v;
  std::vector<Int> out{1};
  if (v <= 1) return out;
  std::vector<std::pair<Int, int>> fac;
  Int d = 2;
  while (d * d <= v) {
    if (v % d == 0) {
      int e = 0;
      while (v % d == 0) { v /= d; ++e; }
      fac.emplace_back(d, e);
    }
    ++d;
  }
  if (v > 1) fac.emplace_back(v, 1);
  for (const auto& [prime, exp] : fac) {
    std::size_t base = out.size();
    Int pw = 1;
    for (int e = 1; e <= exp; ++e) {
      pw *= prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pw);
    }
  }
  return out;
}

} // namespace

std::vector<std::pair<Scalar, int>> find_roots(const Poly& p_in, Field f) {
  Poly p = poly_trim(p_in);
  require(!p.empty(), Err::BadInput, "find_roots of the zero polynomial");
  std::vector<std::pair<Scalar, int>> out;
  auto record = [&](const Scalar& r) {
    if (!poly_eval(p, r).is_zero()) return;
    Poly q = p;
    int mult = 0;
    while (poly_degree(q) >= 1 && poly_eval(q, r).is_zero()) {
      q = poly_div_linear(q, r);
      ++mult;
    }
    out.emplace_back(r, mult);
  };

  if (f->finite()) {
    for (const Scalar& x : enumerate_field(f)) record(x);
  } else {
    // strip x^m, then rational-root candidates from trailing/leading coefficients
    std::size_t low = 0;
    while (low < p.size() && p[low].is_zero()) ++low;
    if (low > 0) out.emplace_back(Scalar::zero(f), static_cast<int>(low));
    Poly q(p.begin() + static_cast<std::ptrdiff_t>(low), p.end());
    if (poly_degree(q) >= 1) {
      // clear denominators
      Int lcm = 1;
      for (const auto& c : q) {
        Int den = denominator(c.rat());
        lcm = lcm / gcd(lcm, den) * den;
      }
      std::vector<Int> zc;
      zc.reserve(q.size());
      for (const auto& c : q) zc.push_back(Int(numerator(c.rat()) * (lcm / denominator(c.rat()))));
      Int a0 = zc.front(), an = zc.back();
      for (const Int& num : divisors_of(a0))
        for (const Int& den : divisors_of(an)) {
          if (gcd(num, den) != 1) continue;
          for (int sign : {1, -1}) {
            Scalar cand(f, make_rat(sign * num, den));
            bool seen = false;
            for (const auto& [r, m] : out) seen = seen || r == cand;
            if (!seen && poly_eval(q, cand).is_zero()) {
              // multiplicity against the full polynomial
              Poly t = p;
              int mult = 0;
              while (poly_degree(t) >= 1 && poly_eval(t, cand).is_zero()) {
                t = poly_div_linear(t, cand);
                ++mult;
              }
              out.emplace_back(cand, mult);
            }
          }
        }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first.less_than(b.first); });
  return out;
}

} // namespace matgen
