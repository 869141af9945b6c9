#include "mckay/group.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "mckay/error.hpp"

namespace mckay {

namespace {

struct PermTables {
  std::array<Perm3, 6> perms;
  std::array<std::array<std::uint8_t, 6>, 6> then{};   // then[a][b]
  std::array<std::uint8_t, 6> inverse{};

  PermTables() {
    std::array<std::uint8_t, 3> img{0, 1, 2};
    int k = 0;
    do {
      perms[k++].image = img;
    } while (std::next_permutation(img.begin(), img.end()));
    auto idx = [&](const Perm3& p) {
      for (int i = 0; i < 6; ++i)
        if (perms[i] == p)
          return i;
      return -1;
    };
    for (int a = 0; a < 6; ++a) {
      for (int b = 0; b < 6; ++b) {
        Perm3 c;
        for (int i = 0; i < 3; ++i)
          c.image[i] = perms[b].image[perms[a].image[i]];
        then[a][b] = static_cast<std::uint8_t>(idx(c));
      }
      Perm3 inv;
      for (int i = 0; i < 3; ++i)
        inv.image[perms[a].image[i]] = static_cast<std::uint8_t>(i);
      inverse[a] = static_cast<std::uint8_t>(idx(inv));
    }
  }
};

const PermTables& tables() {
  static const PermTables t;
  return t;
}

constexpr std::int64_t kMaxDenominator = std::int64_t(1) << 20;

} // namespace

// Perm3

const std::array<Perm3, 6>& Perm3::all() { return tables().perms; }

Perm3 Perm3::from_image(int a, int b, int c) {
  int seen[3] = {0, 0, 0};
  for (int v : {a, b, c}) {
    if (v < 0 || v > 2 || seen[v]++)
      fail(Errc::InvalidParameter, "perm must be a bijection on {0,1,2}");
  }
  Perm3 p;
  p.image = {static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
             static_cast<std::uint8_t>(c)};
  return p;
}

int Perm3::index() const {
  // lexicographic rank of the image array
  int first = image[0];
  int rest = image[1] < image[2] ? 0 : 1;
  return first * 2 + rest;
}

bool Perm3::is_odd() const {
  int inversions = (image[0] > image[1]) + (image[0] > image[2]) + (image[1] > image[2]);
  return inversions % 2 == 1;
}

int Perm3::order() const {
  if (is_identity())
    return 1;
  return is_odd() ? 2 : 3;
}

Perm3 Perm3::inverse() const { return Perm3::from_index(tables().inverse[index()]); }

std::string Perm3::str() const {
  return "(" + std::to_string(image[0]) + " " + std::to_string(image[1]) + " " +
         std::to_string(image[2]) + ")";
}

Perm3 then(const Perm3& first, const Perm3& second) {
  return Perm3::from_index(tables().then[first.index()][second.index()]);
}

// MonomialElement

MonomialElement::MonomialElement(Perm3 p, std::array<Rat, 3> ph) : perm(p) {
  for (int i = 0; i < 3; ++i)
    phases[i] = ph[i].mod1();
}

MonomialElement MonomialElement::diagonal(std::int64_t r, std::int64_t a,
                                          std::int64_t b, std::int64_t c) {
  if (r <= 0)
    fail(Errc::InvalidParameter, "diagonal element needs r >= 1");
  return MonomialElement(Perm3::identity(), {Rat(a, r), Rat(b, r), Rat(c, r)});
}

bool MonomialElement::is_identity() const {
  return perm.is_identity() && phases[0] == 0 && phases[1] == 0 && phases[2] == 0;
}

std::string MonomialElement::str() const {
  std::string phs = phases[0].str() + "," + phases[1].str() + "," + phases[2].str();
  if (is_diagonal())
    return "diag(" + phs + ")";
  return "perm" + perm.str() + "[" + phs + "]";
}

MonomialElement compose(const MonomialElement& a, const MonomialElement& b) {
  // (AB)[i, b(a(i))] = A[i, a(i)] * B[a(i), b(a(i))]
  std::array<Rat, 3> ph;
  for (int i = 0; i < 3; ++i)
    ph[i] = a.phases[i] + b.phases[a.perm(i)];
  return MonomialElement(then(a.perm, b.perm), ph);
}

MonomialElement inverse(const MonomialElement& a) {
  std::array<Rat, 3> ph;
  for (int i = 0; i < 3; ++i)
    ph[a.perm(i)] = -a.phases[i];
  return MonomialElement(a.perm.inverse(), ph);
}

Rat determinant_phase(const MonomialElement& a) {
  Rat s = a.phases[0] + a.phases[1] + a.phases[2];
  if (a.perm.is_odd())
    s += Rat(1, 2);
  return s.mod1();
}

Rat age(const MonomialElement& d) {
  if (!d.is_diagonal())
    fail(Errc::NotDiagonal, "age is defined for diagonal elements only: " + d.str());
  return d.phases[0] + d.phases[1] + d.phases[2];
}

// Case tags

std::string_view case_name(Case c) {
  switch (c) {
    case Case::Abelian: return "abelian";
    case Case::I: return "I";
    case Case::II: return "II";
    case Case::III: return "III";
    case Case::IV: return "IV";
    case Case::V: return "V";
    case Case::Unsupported: return "unsupported";
  }
  return "unsupported";
}

Case parse_case(std::string_view text) {
  for (Case c : {Case::I, Case::II, Case::III, Case::IV, Case::V, Case::Abelian})
    if (text == case_name(c))
      return c;
  fail(Errc::Parse, "unknown case \"" + std::string(text) +
                        "\" (expected one of I, II, III, IV, V)");
}

// FiniteMonomialGroup

FiniteMonomialGroup::Packed FiniteMonomialGroup::pack(const MonomialElement& e) const {
  Packed p;
  p.perm = static_cast<std::uint8_t>(e.perm.index());
  for (int i = 0; i < 3; ++i)
    p.ph[i] = static_cast<std::uint32_t>(e.phases[i].num() * (denom_ / e.phases[i].den()));
  return p;
}

MonomialElement FiniteMonomialGroup::unpack(const Packed& p) const {
  return MonomialElement(Perm3::from_index(p.perm),
                         {Rat(p.ph[0], denom_), Rat(p.ph[1], denom_), Rat(p.ph[2], denom_)});
}

FiniteMonomialGroup::Packed FiniteMonomialGroup::mul(const Packed& a,
                                                     const Packed& b) const {
  const auto& t = tables();
  const auto& ai = t.perms[a.perm].image;
  const std::uint32_t d = static_cast<std::uint32_t>(denom_);
  Packed c;
  c.perm = t.then[a.perm][b.perm];
  for (int i = 0; i < 3; ++i) {
    std::uint32_t s = a.ph[i] + b.ph[ai[i]];
    c.ph[i] = s >= d ? s - d : s;
  }
  return c;
}

std::uint64_t FiniteMonomialGroup::key(const Packed& p) {
  return std::uint64_t(p.perm) | (std::uint64_t(p.ph[0]) << 3) |
         (std::uint64_t(p.ph[1]) << 23) | (std::uint64_t(p.ph[2]) << 43);
}

FiniteMonomialGroup FiniteMonomialGroup::generate(std::span<const MonomialElement> gens,
                                                  std::size_t cap, bool require_sl) {
  if (cap < 1)
    fail(Errc::InvalidParameter, "closure cap must be at least 1");
  FiniteMonomialGroup g;
  for (const auto& e : gens) {
    if (require_sl && determinant_phase(e) != 0)
      fail(Errc::NotSpecialLinear, "generator " + e.str() + " is not in SL(3,C)");
    for (const auto& q : e.phases)
      g.denom_ = checked_lcm(g.denom_, q.den());
    if (g.denom_ > kMaxDenominator)
      fail(Errc::CapExceeded, "phase denominators exceed " + std::to_string(kMaxDenominator));
    g.generators_.push_back(e);
  }

  std::vector<Packed> gp;
  for (const auto& e : g.generators_)
    gp.push_back(g.pack(e));

  std::unordered_set<std::uint64_t> seen;
  std::vector<Packed> found{Packed{}};
  seen.insert(key(found[0]));
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (const auto& s : gp) {
      Packed y = g.mul(found[head], s);
      if (seen.insert(key(y)).second) {
        found.push_back(y);
        if (found.size() > cap)
          fail(Errc::CapExceeded, "group closure produced more than " +
                                      std::to_string(cap) + " elements");
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const Packed& a, const Packed& b) {
    return std::tie(a.perm, a.ph) < std::tie(b.perm, b.ph);
  });
  g.packed_ = std::move(found);
  g.finish();
  return g;
}

void FiniteMonomialGroup::finish() {
  elements_.clear();
  elements_.reserve(packed_.size());
  lookup_.clear();
  lookup_.reserve(packed_.size() * 2);
  perm_image_.clear();
  perm_block_.fill(packed_.size());
  for (std::size_t i = 0; i < packed_.size(); ++i) {
    elements_.push_back(unpack(packed_[i]));
    lookup_.emplace(key(packed_[i]), static_cast<std::uint32_t>(i));
    int p = packed_[i].perm;
    if (perm_image_.empty() || perm_image_.back().index() != p) {
      perm_image_.push_back(Perm3::from_index(p));
      perm_block_[p] = i;
    }
  }
  // Absent permutations get an empty block starting where the next one starts.
  for (int p = 5; p >= 0; --p)
    if (perm_block_[p] == packed_.size() && p < 6)
      perm_block_[p] = perm_block_[p + 1];
  diagonal_order_ = perm_block_[1] - perm_block_[0];
}

std::optional<std::size_t> FiniteMonomialGroup::index_of(const MonomialElement& e) const {
  for (const auto& q : e.phases)
    if (denom_ % q.den() != 0)
      return std::nullopt;
  auto it = lookup_.find(key(pack(e)));
  if (it == lookup_.end())
    return std::nullopt;
  return it->second;
}

std::size_t FiniteMonomialGroup::multiply(std::size_t i, std::size_t j) const {
  return lookup_.at(key(mul(packed_[i], packed_[j])));
}

std::size_t FiniteMonomialGroup::inverse_index(std::size_t i) const {
  const Packed& a = packed_[i];
  const auto& ai = tables().perms[a.perm].image;
  Packed b;
  b.perm = tables().inverse[a.perm];
  for (int k = 0; k < 3; ++k)
    b.ph[ai[k]] = a.ph[k] == 0 ? 0 : static_cast<std::uint32_t>(denom_) - a.ph[k];
  return lookup_.at(key(b));
}

bool FiniteMonomialGroup::commute(std::size_t i, std::size_t j) const {
  Packed ab = mul(packed_[i], packed_[j]);
  Packed ba = mul(packed_[j], packed_[i]);
  return ab.perm == ba.perm && ab.ph == ba.ph;
}

std::vector<std::size_t> FiniteMonomialGroup::generator_indices() const {
  std::vector<std::size_t> out;
  for (const auto& e : generators_)
    out.push_back(*index_of(e));
  return out;
}

// Operations

FiniteMonomialGroup closure(const GroupSpec& spec, std::size_t cap) {
  return FiniteMonomialGroup::generate(spec.generators, cap, true);
}

MonomialElement generator_S() {
  Rat h(1, 2);
  return MonomialElement(Perm3::from_image(0, 2, 1), {h, h, h});
}

MonomialElement generator_T() { return MonomialElement(Perm3::from_image(1, 2, 0), {}); }

MonomialElement generator_C() { return MonomialElement::diagonal(3, 1, 1, 1); }

GroupSpec standard_group(Case kind, int r) {
  if (r < 1)
    fail(Errc::InvalidParameter, "r must be at least 1");
  if ((kind == Case::III || kind == Case::IV) && r % 3 == 0)
    fail(Errc::InvalidParameter, "r must not be divisible by 3");
  if (kind == Case::V && r != 1)
    fail(Errc::InvalidParameter, "case V takes no r parameter (r must be 1)");
  if (kind == Case::Abelian || kind == Case::Unsupported)
    fail(Errc::InvalidParameter,
         "no standard generators for case " + std::string(case_name(kind)));

  const MonomialElement H = MonomialElement::diagonal(r, 0, 1, r - 1);
  const MonomialElement H2 = MonomialElement::diagonal(r, 1, r - 1, 0);
  std::vector<MonomialElement> gens;
  auto add = [&](const MonomialElement& e) {
    if (!e.is_identity())
      gens.push_back(e);
  };
  switch (kind) {
    case Case::I: add(H); add(generator_S()); break;
    case Case::II: add(H); add(H2); add(generator_S()); break;
    case Case::III: add(H); add(generator_S()); add(generator_T()); break;
    case Case::IV:
      add(H); add(generator_S()); add(generator_T()); add(generator_C());
      break;
    case Case::V: add(generator_C()); add(generator_S()); break;
    default: break;
  }
  return GroupSpec{std::move(gens), CaseTag{kind, r}};
}

FiniteMonomialGroup diagonal_subgroup(const FiniteMonomialGroup& g) {
  std::vector<MonomialElement> diag;
  for (const auto& e : g.elements())
    if (e.is_diagonal())
      diag.push_back(e);

  // Greedy small generating set.
  std::vector<MonomialElement> gens;
  FiniteMonomialGroup sub = FiniteMonomialGroup::generate(gens);
  for (const auto& e : diag) {
    if (!sub.contains(e)) {
      gens.push_back(e);
      sub = FiniteMonomialGroup::generate(gens);
    }
  }
  if (sub.order() != diag.size())
    fail(Errc::Arithmetic, "diagonal elements do not form a subgroup");

  for (std::size_t i = 0; i < sub.order(); ++i)
    for (std::size_t j : sub.generator_indices())
      if (!sub.commute(i, j))
        fail(Errc::Arithmetic, "diagonal subgroup is not abelian");
  for (const auto& s : g.generators()) {
    MonomialElement s_inv = inverse(s);
    for (const auto& d : gens)
      if (!sub.contains(compose(compose(s, d), s_inv)))
        fail(Errc::Arithmetic, "diagonal subgroup is not normal");
  }
  return sub;
}

ConjugacyPartition conjugacy_classes(const FiniteMonomialGroup& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> conj;   // pairs (s, s^-1)
  for (std::size_t s : g.generator_indices()) {
    conj.push_back(s);
    conj.push_back(g.inverse_index(s));
  }
  constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> class_of(n, unassigned);
  ConjugacyPartition out;
  for (std::size_t i = 0; i < n; ++i) {
    if (class_of[i] != unassigned)
      continue;
    std::size_t id = out.classes.size();
    std::vector<std::size_t> members{i};
    class_of[i] = id;
    for (std::size_t head = 0; head < members.size(); ++head) {
      std::size_t x = members[head];
      for (std::size_t k = 0; k < conj.size(); k += 2) {
        std::size_t y = g.multiply(g.multiply(conj[k], x), conj[k + 1]);
        if (class_of[y] == unassigned) {
          class_of[y] = id;
          members.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.classes.push_back(std::move(members));
  }
  return out;
}

std::uint64_t commuting_pair_count(const FiniteMonomialGroup& g) {
  const auto& t = tables();
  const auto& pk = g.packed_;
  const std::size_t n = pk.size();
  const std::uint32_t d = static_cast<std::uint32_t>(g.denom_);
  auto add = [d](std::uint32_t a, std::uint32_t b) {
    std::uint32_t s = a + b;
    return s >= d ? s - d : s;
  };

  std::uint64_t off_diagonal = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = pk[i];
    const auto& ai = t.perms[a.perm].image;
    for (int q = a.perm; q < 6; ++q) {
      if (t.then[a.perm][q] != t.then[q][a.perm])
        continue;
      const auto& bi = t.perms[q].image;
      std::size_t lo = std::max(g.perm_block_[q], i + 1);
      std::size_t hi = g.perm_block_[q + 1];
      for (std::size_t j = lo; j < hi; ++j) {
        const auto& b = pk[j];
        if (add(a.ph[0], b.ph[ai[0]]) == add(b.ph[0], a.ph[bi[0]]) &&
            add(a.ph[1], b.ph[ai[1]]) == add(b.ph[1], a.ph[bi[1]]) &&
            add(a.ph[2], b.ph[ai[2]]) == add(b.ph[2], a.ph[bi[2]]))
          ++off_diagonal;
      }
    }
  }
  return n + 2 * off_diagonal;
}

int fixed_subspace_dim(std::span<const MonomialElement> elems) {
  FiniteMonomialGroup k = FiniteMonomialGroup::generate(elems, kDefaultClosureCap, false);
  // The space splits over orbits of the permutation image on coordinates;
  // an orbit carries an invariant vector iff its stabilizer acts trivially
  // on the coordinate line.
  int dim = 0;
  bool done[3] = {false, false, false};
  for (int i0 = 0; i0 < 3; ++i0) {
    if (done[i0])
      continue;
    for (const auto& p : k.perm_image())
      done[p(i0)] = true;
    bool trivial = true;
    for (const auto& e : k.elements())
      if (e.perm(i0) == i0 && e.phases[i0] != 0)
        trivial = false;
    dim += trivial ? 1 : 0;
  }
  return dim;
}

std::int64_t orbifold_euler(const FiniteMonomialGroup& g) {
  std::uint64_t pairs = commuting_pair_count(g);
  if (pairs % g.order() != 0)
    fail(Errc::Arithmetic, "commuting pair count is not divisible by |G|");
  auto value = static_cast<std::int64_t>(pairs / g.order());
  auto classes = static_cast<std::int64_t>(conjugacy_classes(g).class_count());
  if (value != classes)
    fail(Errc::Arithmetic, "Burnside identity violated: " + std::to_string(value) +
                               " != " + std::to_string(classes));
  return value;
}

namespace {

std::optional<int> exact_sqrt(std::size_t n) {
  auto s = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
  for (std::size_t c = s > 0 ? s - 1 : 0; c <= s + 1; ++c)
    if (c * c == n)
      return static_cast<int>(c);
  return std::nullopt;
}

std::int64_t element_order(const MonomialElement& d) {
  std::int64_t o = 1;
  for (const auto& q : d.phases)
    o = checked_lcm(o, q.den());
  return o;
}

std::optional<CaseTag> candidate_case(const FiniteMonomialGroup& g) {
  std::vector<MonomialElement> diag(g.elements().begin(),
                                    g.elements().begin() + static_cast<std::ptrdiff_t>(g.diagonal_order()));
  const std::size_t n = diag.size();
  const MonomialElement C = generator_C();
  const bool has_c = g.contains(C);

  if (g.perm_image().size() == 2) {
    if (n == 3 && has_c)
      return CaseTag{Case::V, 1};
    bool cyclic = std::any_of(diag.begin(), diag.end(), [&](const auto& e) {
      return element_order(e) == static_cast<std::int64_t>(n);
    });
    bool axial = std::all_of(diag.begin(), diag.end(), [](const auto& e) {
      return e.phases[0] == 0 || e.phases[1] == 0 || e.phases[2] == 0;
    });
    if (cyclic && axial)
      return CaseTag{Case::I, static_cast<int>(n)};
    if (auto s = exact_sqrt(n))
      return CaseTag{Case::II, *s};
    return std::nullopt;
  }
  if (g.perm_image().size() == 6) {
    if (has_c) {
      if (n % 3 != 0)
        return std::nullopt;
      auto s = exact_sqrt(n / 3);
      if (s && *s % 3 != 0)
        return CaseTag{Case::IV, *s};
      return std::nullopt;
    }
    auto s = exact_sqrt(n);
    if (s && *s % 3 != 0)
      return CaseTag{Case::III, *s};
  }
  return std::nullopt;
}

} // namespace

CaseTag classify(const FiniteMonomialGroup& g) {
  if (g.perm_image().size() == 1)
    return CaseTag{Case::Abelian, static_cast<int>(g.order())};
  auto cand = candidate_case(g);
  if (!cand)
    return CaseTag{Case::Unsupported, 0};
  // The structural invariants pin down (case, r); confirm that the group is
  // literally the standard one so that the lifted transposition matches S.
  FiniteMonomialGroup standard = closure(standard_group(cand->kind, cand->r));
  if (standard.elements() != g.elements())
    return CaseTag{Case::Unsupported, 0};
  return *cand;
}

} // namespace mckay
