#include "swh/engine.hpp"

#include <algorithm>
#include <unordered_map>

#include "swh/errors.hpp"
#include "swh/milnor.hpp"
#include "swh/spectrum.hpp"

namespace swh {

namespace {

struct VecHash {
  size_t operator()(const std::vector<int>& v) const {
    size_t h = 0xcbf29ce484222325ull;
    for (int x : v) h = (h ^ static_cast<size_t>(x + 0x9e37)) * 0x100000001b3ull;
    return h;
  }
};

using Key = uint64_t;
constexpr int kKBias = 1 << 19;

Key pack(size_t idx, int k) { return (static_cast<uint64_t>(idx) << 20) | static_cast<uint32_t>(k + kKBias); }
size_t idx_of(Key key) { return static_cast<size_t>(key >> 20); }
int k_of(Key key) { return static_cast<int>(key & 0xFFFFF) - kKBias; }

using Sparse = std::vector<std::pair<Key, Rational>>;

// ordered by (degree numerator, key)
using Ordered = std::map<std::pair<int64_t, Key>, Rational>;

void ordered_add(Ordered& v, int64_t deg, Key key, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, ins] = v.try_emplace({deg, key}, c);
  if (!ins) {
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
  }
}

}  // namespace

class GaussManinEngine::Impl {
 public:
  Impl(const Singularity& s, const Rational& cutoff, EngineOptions opt) : s_(s), cutoff_(cutoff), opt_(opt) {
    s_.require_valid();
    e_ = s_.exponents();
    n_ = e_.size();
    L_ = lcm_checked(e_);
    for (int x : e_) wnum_.push_back(L_ / x);
    cut_num_ = (cutoff_ * Rational(L_)).floor_ll();
    stride_.assign(n_, 1);
    for (size_t i = n_; i-- > 1;) stride_[i - 1] = stride_[i] * static_cast<size_t>(e_[i] - 1);
    box_size_ = stride_[0] * static_cast<size_t>(e_[0] - 1);
    box_deg_.resize(box_size_);
    for (size_t idx = 0; idx < box_size_; ++idx) {
      Monomial nu = unindex(idx);
      box_deg_[idx] = mono_deg(nu);
    }
    for (size_t i = 0; i < n_; ++i) inv_ce_.push_back(Rational(1) / (s_.base_coefficients()[i] * Rational(e_[i])));
    for (const auto& t : s_.perturbation())
      pert_.push_back({t.m, t.c, (Rational(1) - s_.unshifted_degree(t.m)) * t.c});
  }

  struct Red {
    Sparse terms;
    bool truncated = false;
  };

  struct Pert {
    Monomial m;
    Rational a;
    Rational u;  // (1 - d(m)) a
  };

  int64_t mono_deg(const Monomial& mu) const {
    int64_t d = 0;
    for (size_t i = 0; i < n_; ++i) d += static_cast<int64_t>(mu[i] + 1) * wnum_[i];
    return d;
  }
  int64_t key_deg(Key key) const { return box_deg_[idx_of(key)] - static_cast<int64_t>(k_of(key)) * L_; }
  Rational deg_rational(int64_t num) const { return Rational(num, L_); }

  size_t index(const Monomial& nu) const {
    size_t idx = 0;
    for (size_t i = 0; i < n_; ++i) idx += static_cast<size_t>(nu[i]) * stride_[i];
    return idx;
  }
  Monomial unindex(size_t idx) const {
    Monomial nu(n_);
    for (size_t i = 0; i < n_; ++i) {
      nu[i] = static_cast<int>(idx / stride_[i]);
      idx %= stride_[i];
    }
    return nu;
  }
  bool inbox(const Monomial& mu) const {
    for (size_t i = 0; i < n_; ++i)
      if (mu[i] > e_[i] - 2) return false;
    return true;
  }

  const Red& reduce(const Monomial& mu, int k) {
    std::vector<int> key = mu;
    key.push_back(k);
    if (auto it = red_.find(key); it != red_.end()) return it->second;
    Red out;
    if (mono_deg(mu) - static_cast<int64_t>(k) * L_ > cut_num_) {
      out.truncated = true;
    } else if (inbox(mu)) {
      out.terms.push_back({pack(index(mu), k), Rational(1)});
    } else {
      size_t i = n_;
      for (size_t j = 0; j < n_; ++j) {
        if (mu[j] >= e_[j] - 1) {
          i = j;
          if (!opt_.reduce_last_index) break;
        }
      }
      std::unordered_map<Key, Rational> acc;
      auto add = [&](const Red& r, const Rational& f) {
        out.truncated |= r.truncated;
        for (const auto& [kk, v] : r.terms) acc[kk] += f * v;
      };
      // x_i^{e_i-1} g = (d_i f - d_i f_{>1}) g / (c_i e_i) and [d_i f g dx] = dt^{-1}[d_i g dx]
      int co = mu[i] - e_[i] + 1;
      if (co != 0) {
        Monomial m2 = mu;
        m2[i] -= e_[i];
        Rational f = inv_ce_[i] * Rational(co);
        add(reduce(m2, k - 1), f);
      }
      for (const auto& p : pert_) {
        if (p.m[i] == 0) continue;
        Monomial m2 = mu;
        for (size_t j = 0; j < n_; ++j) m2[j] += p.m[j];
        m2[i] -= e_[i];
        Rational f = -inv_ce_[i] * p.a * Rational(p.m[i]);
        add(reduce(m2, k), f);
      }
      for (auto& [kk, v] : acc)
        if (!v.is_zero()) out.terms.push_back({kk, std::move(v)});
      std::sort(out.terms.begin(), out.terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    return red_.emplace(std::move(key), std::move(out)).first->second;
  }

  // (dt t - alpha~) applied to the basis element key
  const Sparse& U(Key key) {
    if (auto it = u_.find(key); it != u_.end()) return it->second;
    Monomial nu = unindex(idx_of(key));
    int k = k_of(key);
    std::unordered_map<Key, Rational> acc;
    for (const auto& p : pert_) {
      Monomial mu = nu;
      for (size_t j = 0; j < n_; ++j) mu[j] += p.m[j];
      for (const auto& [kk, v] : reduce(mu, k + 1).terms) acc[kk] += p.u * v;
    }
    Sparse out;
    for (auto& [kk, v] : acc)
      if (!v.is_zero()) out.push_back({kk, std::move(v)});
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return u_.emplace(key, std::move(out)).first->second;
  }

  // eigenvector of dt t with leading term key, modulo V^{>cutoff}
  const Sparse& eigvec(Key key) {
    if (auto it = eig_.find(key); it != eig_.end()) return it->second;
    const int64_t al = key_deg(key);
    std::unordered_map<Key, Rational> v;
    v[key] = Rational(1);
    Ordered r;
    for (const auto& [t, c] : U(key)) ordered_add(r, key_deg(t), t, c);
    while (!r.empty()) {
      auto it = r.begin();
      auto [b, t] = it->first;
      Rational x = -it->second / Rational(b - al, L_);
      r.erase(it);
      v[t] += x;
      for (const auto& [t2, c2] : U(t)) ordered_add(r, key_deg(t2), t2, x * c2);
    }
    Sparse out;
    for (auto& [kk, c] : v)
      if (!c.is_zero()) out.push_back({kk, std::move(c)});
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return eig_.emplace(key, std::move(out)).first->second;
  }

  struct RawComponent {
    int64_t deg;
    Sparse lead;
  };

  std::vector<RawComponent> expand(const Sparse& x) {
    Ordered xi;
    for (const auto& [t, c] : x) ordered_add(xi, key_deg(t), t, c);
    std::vector<RawComponent> comps;
    while (!xi.empty()) {
      int64_t b = xi.begin()->first.first;
      RawComponent rc{b, {}};
      while (!xi.empty() && xi.begin()->first.first == b) {
        rc.lead.push_back({xi.begin()->first.second, xi.begin()->second});
        xi.erase(xi.begin());
      }
      for (const auto& [t, c] : rc.lead)
        for (const auto& [t2, c2] : eigvec(t))
          if (t2 != t) ordered_add(xi, key_deg(t2), t2, -c * c2);
      comps.push_back(std::move(rc));
    }
    return comps;
  }

  GMTerm to_term(Key key, const Rational& c) const { return GMTerm{unindex(idx_of(key)), k_of(key), c}; }

  std::vector<GMTerm> to_terms(const Sparse& s) const {
    std::vector<std::pair<std::pair<int64_t, Key>, const Rational*>> tmp;
    for (const auto& [t, c] : s) tmp.push_back({{key_deg(t), t}, &c});
    std::sort(tmp.begin(), tmp.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<GMTerm> out;
    for (const auto& [dk, c] : tmp) out.push_back(to_term(dk.second, *c));
    return out;
  }

  Sparse from_element(const GMElement& x, bool& truncated) {
    std::unordered_map<Key, Rational> acc;
    for (const auto& t : x.terms) {
      if (t.nu.size() != n_) throw Error(ErrorKind::Validation, "term monomial length does not match n");
      for (int v : t.nu)
        if (v < 0) throw Error(ErrorKind::Validation, "negative exponent in term");
      const Red& r = reduce(t.nu, t.k);
      truncated |= r.truncated;
      for (const auto& [kk, v] : r.terms) acc[kk] += t.coeff * v;
    }
    Sparse out;
    for (auto& [kk, v] : acc)
      if (!v.is_zero()) out.push_back({kk, std::move(v)});
    return out;
  }

  void compute_shifts() {
    if (shifts_done_) return;
    shifts_.assign(box_size_, 0);
    for (size_t src = 0; src < box_size_; ++src) {
      if (box_deg_[src] > cut_num_) continue;
      for (const auto& rc : expand({{pack(src, 0), Rational(1)}}))
        for (const auto& [t, c] : rc.lead) shifts_[idx_of(t)] = std::max(shifts_[idx_of(t)], k_of(t));
    }
    shifts_done_ = true;
  }

  void compute_births() {
    if (births_done_) return;
    // one echelon basis per residue class of the degree mod 1
    struct Vec {
      int64_t deg;
      std::map<size_t, Rational> coords;
    };
    std::vector<Vec> vecs;
    for (size_t src = 0; src < box_size_; ++src) {
      if (box_deg_[src] > cut_num_) continue;
      for (auto& rc : expand({{pack(src, 0), Rational(1)}})) {
        Vec v{rc.deg, {}};
        for (auto& [t, c] : rc.lead) v.coords.emplace(idx_of(t), c);
        vecs.push_back(std::move(v));
      }
    }
    std::stable_sort(vecs.begin(), vecs.end(), [](const Vec& a, const Vec& b) { return a.deg < b.deg; });
    std::map<int64_t, std::map<size_t, std::map<size_t, Rational>>> echelon;  // class -> pivot -> row
    for (auto& v : vecs) {
      int64_t cls = ((v.deg % L_) + L_) % L_;
      auto& rows = echelon[cls];
      auto& w = v.coords;
      while (!w.empty()) {
        auto it = rows.find(w.begin()->first);
        if (it == rows.end()) break;
        Rational f = w.begin()->second;
        for (const auto& [j, rv] : it->second) {
          auto [wi, ins] = w.try_emplace(j, Rational(0));
          wi->second -= f * rv;
          if (wi->second.is_zero()) w.erase(wi);
        }
      }
      if (w.empty()) continue;
      Rational p = w.begin()->second;
      for (auto& [j, x] : w) x /= p;
      size_t piv = w.begin()->first;
      rows.emplace(piv, std::move(w));
      births_[deg_rational(v.deg)] += 1;
    }
    births_done_ = true;
  }

  Singularity s_;
  Rational cutoff_;
  EngineOptions opt_;
  std::vector<int> e_;
  size_t n_ = 0;
  int64_t L_ = 1;
  std::vector<int64_t> wnum_;
  int64_t cut_num_ = 0;
  std::vector<size_t> stride_;
  size_t box_size_ = 0;
  std::vector<int64_t> box_deg_;
  std::vector<Rational> inv_ce_;
  std::vector<Pert> pert_;

  std::unordered_map<std::vector<int>, Red, VecHash> red_;
  std::unordered_map<Key, Sparse> u_;
  std::unordered_map<Key, Sparse> eig_;

  bool shifts_done_ = false;
  std::vector<int> shifts_;
  bool births_done_ = false;
  std::map<Rational, uint64_t> births_;
};

GaussManinEngine::GaussManinEngine(const Singularity& s, const Rational& cutoff, EngineOptions opt)
    : impl_(std::make_unique<Impl>(s, cutoff, opt)) {}
GaussManinEngine::~GaussManinEngine() = default;

const Singularity& GaussManinEngine::singularity() const { return impl_->s_; }
const Rational& GaussManinEngine::cutoff() const { return impl_->cutoff_; }

GMElement GaussManinEngine::reduce(const GMElement& x) {
  bool trunc = false;
  GMElement out;
  out.terms = impl_->to_terms(impl_->from_element(x, trunc));
  return out;
}

GMElement GaussManinEngine::reduce_monomial(const Monomial& mu, int k) {
  return reduce(GMElement{{GMTerm{mu, k, Rational(1)}}});
}

std::vector<Component> GaussManinEngine::expand(const GMElement& x) {
  bool trunc = false;
  Sparse sx = impl_->from_element(x, trunc);
  std::vector<Component> out;
  for (const auto& rc : impl_->expand(sx)) out.push_back({impl_->deg_rational(rc.deg), impl_->to_terms(rc.lead)});
  return out;
}

ExpansionReport GaussManinEngine::expand_monomial(const Monomial& h) {
  ExpansionReport rep;
  rep.input = h;
  rep.input_degree = impl_->s_.shifted_degree(h);
  for (int v : h)
    if (v < 0) throw Error(ErrorKind::Validation, "negative exponent in monomial");
  if (impl_->cutoff_ <= rep.input_degree)
    throw Error(ErrorKind::CutoffExhausted, "cutoff " + impl_->cutoff_.str() + " must exceed alpha~(h) = " +
                                                rep.input_degree.str() + "; increase cutoff");
  bool trunc = false;
  Sparse sx = impl_->from_element(GMElement{{GMTerm{h, 0, Rational(1)}}}, trunc);
  if (sx.empty() && trunc)
    throw Error(ErrorKind::CutoffExhausted, "class of x^" + monomial_str(h) + " vanishes below cutoff " +
                                                impl_->cutoff_.str() + "; increase cutoff");
  for (const auto& rc : impl_->expand(sx))
    rep.components.push_back({impl_->deg_rational(rc.deg), impl_->to_terms(rc.lead)});
  if (!rep.components.empty()) {
    rep.leading_degree = rep.components.front().alpha;
    rep.measured_shift = rep.input_degree - *rep.leading_degree;
    rep.leading_coefficient = rep.components.front().terms.front().coeff;
  }
  return rep;
}

int GaussManinEngine::expansion_shift(const Monomial& nu) {
  if (!is_nonzero_in_milnor(impl_->e_, nu)) throw Error(ErrorKind::Validation, "monomial not in the Milnor basis");
  Rational need = impl_->s_.shifted_degree(nu) - Rational(1);
  if (need > impl_->cutoff_)
    throw Error(ErrorKind::CutoffExhausted, "cutoff below alpha~(nu) - 1; increase cutoff");
  impl_->compute_shifts();
  return impl_->shifts_[impl_->index(nu)];
}

const std::map<Rational, uint64_t>& GaussManinEngine::births() {
  impl_->compute_births();
  return impl_->births_;
}

std::set<Rational> GaussManinEngine::root_exponents() {
  std::set<Rational> out;
  for (const auto& [a, m] : births()) out.insert(a);
  return out;
}

uint64_t GaussManinEngine::nu_tilde(const Rational& alpha) {
  Rational top = max_shifted_degree(impl_->e_);
  if (impl_->cutoff_ < top && alpha > impl_->cutoff_)
    throw Error(ErrorKind::CutoffExhausted, "saturation profile needs cutoff >= " + std::min(alpha, top).str());
  Rational cls = alpha.frac();
  uint64_t t = 0;
  for (const auto& [b, m] : births()) {
    if (b > alpha) break;
    if (b.frac() == cls) t += m;
  }
  return t;
}

Rational max_shifted_degree(const std::vector<int>& e) {
  Rational s;
  for (int x : e) s += Rational(x - 1, x);
  return s;
}

ExpansionReport expand(const Singularity& s, const Monomial& h, const Rational& cutoff) {
  GaussManinEngine eng(s, cutoff);
  return eng.expand_monomial(h);
}

int expansion_shift(const Singularity& s, const Monomial& nu) {
  Rational need = s.shifted_degree(nu) - Rational(1);
  if (need < s.min_exponent()) {
    if (!is_nonzero_in_milnor(s.exponents(), nu)) throw Error(ErrorKind::Validation, "monomial not in the Milnor basis");
    return 0;
  }
  GaussManinEngine eng(s, need);
  return eng.expansion_shift(nu);
}

ShiftTable engine_shift_table(const Singularity& s, EngineOptions opt) {
  GaussManinEngine eng(s, max_shifted_degree(s.exponents()) - Rational(1), opt);
  ShiftTable t = shift_table(s.exponents(), std::nullopt);
  if (s.perturbation().size() == 1) t.a = s.perturbation().front().m;
  for (auto& en : t.entries) {
    Monomial nu = en.xi;
    for (auto& v : nu) --v;
    en.r = eng.expansion_shift(nu);
  }
  return t;
}

BSRootSet engine_bs_roots(const Singularity& s) {
  GaussManinEngine eng(s, max_shifted_degree(s.exponents()));
  BSRootSet b;
  b.exponents = eng.root_exponents();
  return b;
}

std::vector<GMTerm> component_at(const Singularity& s, const Monomial& h, const Rational& alpha) {
  if (alpha < s.shifted_degree(h)) return {};
  GaussManinEngine eng(s, alpha);
  bool trunc = false;
  (void)trunc;
  for (const auto& c : eng.expand(GMElement{{GMTerm{h, 0, Rational(1)}}}))
    if (c.alpha == alpha) return c.terms;
  return {};
}

namespace {

// coefficients (low to high) of the interpolating polynomial through (xs[i], ys[i])
std::vector<Rational> interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const size_t m = xs.size();
  std::vector<Rational> dd = ys;
  for (size_t j = 1; j < m; ++j)
    for (size_t i = m - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  std::vector<Rational> poly(m, Rational(0));
  for (size_t j = m; j-- > 0;) {
    // poly = poly * (x - xs[j]) + dd[j]
    std::vector<Rational> next(m, Rational(0));
    for (size_t d = 0; d + 1 < m; ++d) next[d + 1] += poly[d];
    for (size_t d = 0; d < m; ++d) next[d] -= poly[d] * xs[j];
    next[0] += dd[j];
    poly.swap(next);
  }
  return poly;
}

}  // namespace

CancelResult find_cancelling_coefficient(const Singularity& base, const Monomial& symbolic, const Monomial& h,
                                         const Rational& target) {
  base.require_valid();
  CancelResult res;
  Rational dm = base.unshifted_degree(symbolic);
  if (dm <= Rational(1)) throw Error(ErrorKind::Validation, "symbolic monomial degree " + dm.str() + " <= 1");
  for (const auto& t : base.perturbation())
    if (t.m == symbolic) throw Error(ErrorKind::Validation, "symbolic monomial already in the perturbation");
  Rational gap = target - base.shifted_degree(h);
  if (gap.sign() < 0) {
    res.note = "target below alpha~(h); component is identically zero";
    return res;
  }
  res.degree_bound = static_cast<int>((gap / (dm - Rational(1))).floor_ll());
  const int D = res.degree_bound;

  std::vector<Rational> xs;
  std::vector<std::map<std::pair<Monomial, int>, Rational>> samples;
  std::set<std::pair<Monomial, int>> coords;
  for (int j = 0; j <= D; ++j) {
    Rational c(j);
    auto pert = base.perturbation();
    if (!c.is_zero()) pert.push_back({symbolic, c});
    auto terms = component_at(base.with_perturbation(pert), h, target);
    std::map<std::pair<Monomial, int>, Rational> m;
    for (auto& t : terms) {
      coords.insert({t.nu, t.k});
      m[{t.nu, t.k}] = t.coeff;
    }
    xs.push_back(c);
    samples.push_back(std::move(m));
  }
  if (coords.empty()) {
    res.note = "component vanishes for every c";
    return res;
  }
  std::optional<Rational> sol;
  bool depends = false;
  for (const auto& key : coords) {
    std::vector<Rational> ys;
    for (auto& s : samples) {
      auto it = s.find(key);
      ys.push_back(it == s.end() ? Rational(0) : it->second);
    }
    auto poly = interpolate(xs, ys);
    for (size_t d = 2; d < poly.size(); ++d)
      if (!poly[d].is_zero())
        throw Error(ErrorKind::Nonlinear, "component depends on c with degree " + std::to_string(d) +
                                              "; solve manually");
    Rational c0 = poly[0], c1 = poly.size() > 1 ? poly[1] : Rational(0);
    if (c1.is_zero()) {
      if (!c0.is_zero()) {
        res.note = "coordinate " + monomial_str(key.first) + " is nonzero independently of c";
        return res;
      }
      continue;
    }
    depends = true;
    Rational c = -c0 / c1;
    if (sol && *sol != c) {
      res.note = "coordinates vanish at different values of c";
      return res;
    }
    sol = c;
  }
  if (!depends) {
    res.note = "component does not depend on c";
    return res;
  }
  if (sol && sol->is_zero()) {
    res.note = "cancellation requires c = 0";
    return res;
  }
  res.c = sol;
  res.note = "affine in c";
  return res;
}

}  // namespace swh
