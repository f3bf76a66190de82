#include "dp6/numfield.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dp6/linalgq.hpp"

namespace dp6 {

namespace {

std::vector<Rat> reduce_coeffs(const QPoly& p, const QPoly& modulus) {
  QPoly r = p.mod(modulus);
  std::vector<Rat> c = r.coeffs();
  c.resize(static_cast<size_t>(modulus.degree()), Rat(0));
  return c;
}

}  // namespace

FieldElem::FieldElem(FieldPtr field, std::vector<Rat> coeffs) : field_(std::move(field)) {
  c_ = reduce_coeffs(QPoly(std::move(coeffs)), field_->modulus());
}

bool FieldElem::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rat& a) { return a == 0; });
}

bool FieldElem::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat FieldElem::rational_value() const {
  if (!is_rational()) fail(Err::Internal, "element is not rational");
  return c_.empty() ? Rat(0) : c_[0];
}

static void check_same_field(const FieldElem& a, const FieldElem& b) {
  if (a.field() != b.field()) fail(Err::Internal, "mixed-field arithmetic");
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  check_same_field(*this, o);
  std::vector<Rat> r = c_;
  for (size_t i = 0; i < r.size(); ++i) r[i] += o.c_[i];
  return FieldElem(field_, std::move(r));
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  check_same_field(*this, o);
  std::vector<Rat> r = c_;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= o.c_[i];
  return FieldElem(field_, std::move(r));
}

FieldElem FieldElem::operator-() const { return *this * Rat(-1); }

FieldElem FieldElem::operator*(const FieldElem& o) const {
  check_same_field(*this, o);
  return FieldElem(field_, (as_poly() * o.as_poly()).coeffs());
}

FieldElem FieldElem::operator*(const Rat& a) const {
  std::vector<Rat> r = c_;
  for (auto& x : r) x *= a;
  return FieldElem(field_, std::move(r));
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
  return *this * field_->inv(o);
}

bool FieldElem::operator==(const FieldElem& o) const {
  return field_ == o.field_ && c_ == o.c_;
}

std::string FieldElem::str() const { return as_poly().str(); }

FieldPtr NumberField::make(const QPoly& modulus, const std::vector<QPoly>& images) {
  if (modulus.degree() < 1 || modulus.degree() > 12)
    fail(Err::DegenerateInput, "modulus degree must be between 1 and 12");
  if (!modulus.is_monic()) fail(Err::DegenerateInput, "modulus must be monic");
  for (const Rat& a : modulus.coeffs())
    if (denominator(a) != 1)
      fail(Err::DegenerateInput, "modulus must have integer coefficients");
  const int n = modulus.degree();
  if (static_cast<int>(images.size()) != n)
    fail(Err::NotAGroup, "automorphism list must have length deg(f) = " + std::to_string(n));

  auto F = std::shared_ptr<NumberField>(new NumberField());
  F->modulus_ = modulus;
  F->degree_ = n;
  F->images_.reserve(images.size());
  for (const QPoly& g : images) F->images_.push_back(g.mod(modulus));

  // ring homomorphism law: f(g) = 0 mod f
  for (size_t i = 0; i < F->images_.size(); ++i) {
    QPoly acc;  // f evaluated at g, mod f
    const QPoly& g = F->images_[i];
    QPoly pw = QPoly::constant(1);
    for (size_t k = 0; k < modulus.coeffs().size(); ++k) {
      acc = (acc + pw * modulus.coeff(k)).mod(modulus);
      pw = (pw * g).mod(modulus);
    }
    if (!acc.is_zero())
      fail(Err::HomomorphismFailure,
           "image " + std::to_string(i) + " = " + g.str() + " has f(g) = " + acc.str() +
               " != 0 mod f");
  }

  // distinctness and identity
  for (size_t i = 0; i < F->images_.size(); ++i)
    for (size_t j = i + 1; j < F->images_.size(); ++j)
      if (F->images_[i] == F->images_[j]) fail(Err::NotAGroup, "duplicate automorphism images");
  const QPoly id_image = QPoly::x().mod(modulus);
  for (size_t i = 0; i < F->images_.size(); ++i)
    if (F->images_[i] == id_image) F->id_index_ = static_cast<int>(i);
  if (F->id_index_ < 0) fail(Err::NotAGroup, "identity automorphism missing");

  // substitution matrices: sigma_i(t^k) = g_i^k mod f
  F->auto_mat_.resize(n);
  for (int i = 0; i < n; ++i) {
    F->auto_mat_[i].resize(n);
    QPoly pw = QPoly::constant(1);
    for (int k = 0; k < n; ++k) {
      F->auto_mat_[i][k] = reduce_coeffs(pw, modulus);
      pw = (pw * F->images_[i]).mod(modulus);
    }
  }

  // composition table: (sigma_i after sigma_j)(t) = g_j evaluated at g_i
  auto subst = [&](const QPoly& outer, const QPoly& inner) {
    QPoly acc, pw = QPoly::constant(1);
    for (size_t k = 0; k < outer.coeffs().size(); ++k) {
      acc = (acc + pw * outer.coeff(k)).mod(modulus);
      pw = (pw * inner).mod(modulus);
    }
    return acc;
  };
  F->comp_.assign(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      QPoly comp = subst(F->images_[j], F->images_[i]);
      for (int k = 0; k < n; ++k)
        if (comp == F->images_[k]) { F->comp_[i][j] = k; break; }
      if (F->comp_[i][j] < 0)
        fail(Err::NotAGroup, "automorphism list not closed under composition");
    }

  // inverses
  F->inv_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (F->comp_[i][j] == F->id_index_ && F->comp_[j][i] == F->id_index_) F->inv_[i] = j;
    if (F->inv_[i] < 0) fail(Err::NotAGroup, "automorphism without inverse");
  }

  // associativity of the table, verified once
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (F->comp_[F->comp_[i][j]][k] != F->comp_[i][F->comp_[j][k]])
          fail(Err::NotAGroup, "composition table not associative");

  return F;
}

FieldElem NumberField::elem(std::vector<Rat> coeffs) const {
  return FieldElem(shared_from_this(), std::move(coeffs));
}

FieldElem NumberField::from_rational(const Rat& a) const { return elem({a}); }

FieldElem NumberField::gen() const { return elem({Rat(0), Rat(1)}); }

FieldElem NumberField::apply(int i, const FieldElem& x) const {
  if (i < 0 || i >= degree_) fail(Err::Internal, "automorphism index out of range");
  std::vector<Rat> out(degree_, Rat(0));
  for (int k = 0; k < degree_; ++k) {
    const Rat& a = x.coeff(k);
    if (a == 0) continue;
    const auto& col = auto_mat_[i][k];
    for (int r = 0; r < degree_; ++r) out[r] += a * col[r];
  }
  return elem(std::move(out));
}

FieldElem NumberField::inv(const FieldElem& x) const {
  if (x.is_zero()) fail(Err::NotInvertible, "division by zero");
  auto [g, u, v] = QPoly::xgcd(x.as_poly(), modulus_);
  (void)v;
  if (g.degree() != 0)
    fail(Err::ZeroDivisor, "gcd(" + x.str() + ", f) = " + g.str() +
                               "; modulus is reducible, scenario aborted");
  return elem(u.coeffs());
}

QPoly NumberField::minimal_polynomial(const FieldElem& x) const {
  // smallest d with 1, x, ..., x^d linearly dependent over Q
  std::vector<std::vector<Rat>> rows;
  FieldElem pw = one();
  for (int d = 0; d <= degree_; ++d) {
    rows.push_back(pw.coeffs());
    // solve: does x^d lie in span of previous powers?
    if (d > 0) {
      std::vector<std::vector<Rat>> sys(degree_, std::vector<Rat>(d + 1, Rat(0)));
      for (int j = 0; j <= d; ++j)
        for (int r = 0; r < degree_; ++r) sys[r][j] = rows[j][r];
      auto ker = linalg::kernel_basis(sys);
      for (const auto& k : ker) {
        if (k[d] != 0) {
          std::vector<Rat> mono(d + 1);
          for (int j = 0; j <= d; ++j) mono[j] = k[j] / k[d];
          return QPoly(std::move(mono));
        }
      }
    }
    pw = pw * x;
  }
  fail(Err::Internal, "minimal polynomial search overran field degree");
}

Subgroup Subgroup::make(FieldPtr field, std::vector<int> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  if (indices.empty()) fail(Err::InvalidSubgroup, "empty subgroup");
  for (int i : indices)
    if (i < 0 || i >= field->group_order()) fail(Err::InvalidSubgroup, "index out of range");
  auto has = [&](int k) { return std::binary_search(indices.begin(), indices.end(), k); };
  if (!has(field->identity_index())) fail(Err::InvalidSubgroup, "identity not in subgroup");
  for (int i : indices) {
    if (!has(field->inverse(i))) fail(Err::InvalidSubgroup, "subgroup not closed under inverses");
    for (int j : indices)
      if (!has(field->compose(i, j))) fail(Err::InvalidSubgroup, "subgroup not closed");
  }
  Subgroup s;
  s.field_ = std::move(field);
  s.idx_ = std::move(indices);
  return s;
}

Subgroup Subgroup::whole(FieldPtr field) {
  std::vector<int> all(field->group_order());
  std::iota(all.begin(), all.end(), 0);
  return make(std::move(field), std::move(all));
}

Subgroup Subgroup::trivial(FieldPtr field) {
  int id = field->identity_index();
  return make(std::move(field), {id});
}

int Subgroup::index_in_group() const {
  return field_->group_order() / static_cast<int>(idx_.size());
}

bool Subgroup::contains(int i) const {
  return std::binary_search(idx_.begin(), idx_.end(), i);
}

int Subgroup::cyclic_generator() const {
  for (int g : idx_) {
    size_t ord = 1;
    int cur = g;
    while (cur != field_->identity_index()) {
      cur = field_->compose(g, cur);
      ++ord;
    }
    if (ord == idx_.size()) return g;
  }
  return -1;
}

Etale2 Etale2::quadratic(FieldElem prim, QPoly mp) {
  if (mp.degree() != 2 || !mp.is_monic())
    fail(Err::Internal, "quadratic etale algebra needs a monic degree-2 minimal polynomial");
  Etale2 e;
  e.kind = Kind::Quadratic;
  e.primitive = std::move(prim);
  e.minpoly = std::move(mp);
  return e;
}

static Rat quadratic_discriminant(const QPoly& mp) {
  if (mp.degree() != 2) fail(Err::Internal, "not a quadratic polynomial");
  Rat a = mp.coeff(2), b = mp.coeff(1), c = mp.coeff(0);
  return b * b - 4 * a * c;
}

bool same_quadratic_field(const QPoly& a, const QPoly& b) {
  Rat da = quadratic_discriminant(a), db = quadratic_discriminant(b);
  if (da == 0 || db == 0) return da == db;
  return rat_is_square(da * db);
}

QPoly quadratic_normal_form(const QPoly& mp) {
  Rat d = quadratic_discriminant(mp);
  if (auto sf = squarefree_part(d)) return QPoly({Rat(-*sf), Rat(0), Rat(1)});
  // completed square fallback: x^2 - D with D the raw discriminant
  return QPoly({-d, Rat(0), Rat(1)});
}

Etale2 fixed_subfield(const FieldPtr& field, const Subgroup& subgroup) {
  int index = subgroup.index_in_group();
  if (index == 1) return Etale2::split();
  if (index != 2) fail(Err::InvalidSubgroup, "fixed_subfield needs a subgroup of index 1 or 2");

  // Deterministic sweep: orbit sums over H of t^k, then of t^a + t^b.
  std::vector<FieldElem> candidates;
  const int n = field->degree();
  for (int k = 1; k < n; ++k) {
    FieldElem pw = field->one();
    for (int j = 0; j < k; ++j) pw = pw * field->gen();
    candidates.push_back(pw);
  }
  for (int a = 1; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      FieldElem pa = field->one(), pb = field->one();
      for (int j = 0; j < a; ++j) pa = pa * field->gen();
      for (int j = 0; j < b; ++j) pb = pb * field->gen();
      candidates.push_back(pa + pb);
    }

  for (const FieldElem& w : candidates) {
    FieldElem orbit_sum = field->zero();
    for (int h : subgroup.indices()) orbit_sum = orbit_sum + field->apply(h, w);
    QPoly mp = field->minimal_polynomial(orbit_sum);
    if (mp.degree() == 2) return Etale2::quadratic(orbit_sum, mp);
  }
  fail(Err::NoPrimitiveElement, "bounded orbit-sum sweep found no degree-2 element");
}

IndexAction IndexAction::make(Subgroup group, std::vector<std::array<int, 3>> perms) {
  if (perms.size() != group.order()) fail(Err::NotAnAction, "permutation list size mismatch");
  const NumberField& F = *group.field();
  auto pos = [&](int sigma) {
    const auto& idx = group.indices();
    auto it = std::lower_bound(idx.begin(), idx.end(), sigma);
    if (it == idx.end() || *it != sigma) fail(Err::NotAnAction, "element outside subgroup");
    return static_cast<size_t>(it - idx.begin());
  };
  for (const auto& p : perms) {
    std::array<bool, 3> seen{false, false, false};
    for (int v : p) {
      if (v < 0 || v > 2 || seen[v]) fail(Err::NotAnAction, "not a permutation of {0,1,2}");
      seen[v] = true;
    }
  }
  // identity and homomorphism
  const auto& id_perm = perms[pos(F.identity_index())];
  if (!(id_perm[0] == 0 && id_perm[1] == 1 && id_perm[2] == 2))
    fail(Err::NotAnAction, "identity automorphism must act trivially");
  for (int s : group.indices())
    for (int u : group.indices()) {
      const auto& ps = perms[pos(s)];
      const auto& pu = perms[pos(u)];
      const auto& pc = perms[pos(F.compose(s, u))];
      for (int i = 0; i < 3; ++i)
        if (pc[i] != ps[pu[i]]) fail(Err::NotAnAction, "index action is not a homomorphism");
    }
  IndexAction a;
  a.group_ = std::move(group);
  a.perms_ = std::move(perms);
  return a;
}

IndexAction IndexAction::trivial(Subgroup group) {
  std::vector<std::array<int, 3>> perms(group.order(), {0, 1, 2});
  return make(std::move(group), std::move(perms));
}

const std::array<int, 3>& IndexAction::perm(int sigma) const {
  const auto& idx = group_.indices();
  auto it = std::lower_bound(idx.begin(), idx.end(), sigma);
  if (it == idx.end() || *it != sigma) fail(Err::NotAnAction, "element outside subgroup");
  return perms_[static_cast<size_t>(it - idx.begin())];
}

std::array<int, 3> IndexAction::inverse_perm(int sigma) const {
  const auto& p = perm(sigma);
  std::array<int, 3> q{};
  for (int i = 0; i < 3; ++i) q[p[i]] = i;
  return q;
}

EtaleTriple EtaleTriple::ones(const FieldPtr& field) {
  return {{field->one(), field->one(), field->one()}};
}

bool EtaleTriple::is_invertible() const {
  return !v[0].is_zero() && !v[1].is_zero() && !v[2].is_zero();
}

EtaleTriple EtaleTriple::mul(const EtaleTriple& o) const {
  return {{v[0] * o.v[0], v[1] * o.v[1], v[2] * o.v[2]}};
}

EtaleTriple EtaleTriple::inv() const {
  if (!is_invertible()) fail(Err::NotInvertible, "etale element has a zero component");
  const FieldPtr& F = v[0].field();
  return {{F->inv(v[0]), F->inv(v[1]), F->inv(v[2])}};
}

std::string EtaleTriple::str() const {
  return "(" + v[0].str() + ", " + v[1].str() + ", " + v[2].str() + ")";
}

EtaleTriple etale_galois(const IndexAction& action, int sigma, const EtaleTriple& e) {
  const FieldPtr& F = action.group().field();
  auto pinv = action.inverse_perm(sigma);
  EtaleTriple out;
  for (int i = 0; i < 3; ++i) out.v[i] = F->apply(sigma, e.v[pinv[i]]);
  return out;
}

}  // namespace dp6
