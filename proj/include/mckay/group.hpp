#ifndef MCKAY_GROUP_HPP_
#define MCKAY_GROUP_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mckay/rational.hpp"

namespace mckay {

// PERMUTATIONS OF THREE COORDINATES

struct Perm3 {
  std::array<std::uint8_t, 3> image{0, 1, 2};

  static Perm3 identity() { return {}; }
  /// All six permutations in lexicographic order of their image arrays.
  static const std::array<Perm3, 6>& all();
  static Perm3 from_index(int idx) { return all()[idx]; }
  /// Throws Errc::InvalidParameter unless {a,b,c} = {0,1,2}.
  static Perm3 from_image(int a, int b, int c);

  int operator()(int i) const { return image[i]; }
  int index() const;
  bool is_identity() const { return image[0] == 0 && image[1] == 1 && image[2] == 2; }
  bool is_odd() const;
  int order() const;
  Perm3 inverse() const;
  std::string str() const;

  friend auto operator<=>(const Perm3&, const Perm3&) = default;
};

/// i -> second(first(i)).
Perm3 then(const Perm3& first, const Perm3& second);

// MONOMIAL MATRICES

/// A monomial matrix in GL(3,C): the entry exp(2 pi i phases[i]) sits in
/// row i, column perm(i); all other entries are zero. Phases live in [0,1).
struct MonomialElement {
  Perm3 perm;
  std::array<Rat, 3> phases{};

  MonomialElement() = default;
  MonomialElement(Perm3 p, std::array<Rat, 3> ph);

  static MonomialElement identity() { return {}; }
  /// The diagonal element 1/r(a,b,c).
  static MonomialElement diagonal(std::int64_t r, std::int64_t a, std::int64_t b,
                                  std::int64_t c);

  bool is_diagonal() const { return perm.is_identity(); }
  bool is_identity() const;
  std::string str() const;

  friend auto operator<=>(const MonomialElement&, const MonomialElement&) = default;
};

MonomialElement compose(const MonomialElement& a, const MonomialElement& b);
MonomialElement inverse(const MonomialElement& a);
/// Phase of the determinant, in [0,1). Zero iff the element lies in SL(3,C).
Rat determinant_phase(const MonomialElement& a);
/// Sum of phases of a diagonal element; Errc::NotDiagonal otherwise.
Rat age(const MonomialElement& d);

// CASE TAGS

enum class Case { Abelian, I, II, III, IV, V, Unsupported };

struct CaseTag {
  Case kind = Case::Unsupported;
  /// Family parameter; for Abelian groups this is the group order.
  int r = 0;
  friend bool operator==(const CaseTag&, const CaseTag&) = default;
};

std::string_view case_name(Case c);
/// "I".."V" (also "abelian"); Errc::Parse for anything else.
Case parse_case(std::string_view text);

struct GroupSpec {
  std::vector<MonomialElement> generators;
  std::optional<CaseTag> label;
};

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

// FINITE GROUPS

class FiniteMonomialGroup {
public:
  /// Breadth-first closure of the generators. Throws CapExceeded when more
  /// than `cap` elements appear; NotSpecialLinear when `require_sl` and a
  /// generator has nonzero determinant phase.
  static FiniteMonomialGroup generate(std::span<const MonomialElement> gens,
                                      std::size_t cap = kDefaultClosureCap,
                                      bool require_sl = true);

  /// Sorted by permutation, then phases.
  const std::vector<MonomialElement>& elements() const { return elements_; }
  const std::vector<MonomialElement>& generators() const { return generators_; }
  std::size_t order() const { return elements_.size(); }
  std::size_t diagonal_order() const { return diagonal_order_; }
  /// Image of the projection onto S_3, sorted.
  const std::vector<Perm3>& perm_image() const { return perm_image_; }
  /// Common denominator of every phase in the group.
  std::int64_t denominator() const { return denom_; }

  std::optional<std::size_t> index_of(const MonomialElement& e) const;
  bool contains(const MonomialElement& e) const { return index_of(e).has_value(); }
  std::size_t multiply(std::size_t i, std::size_t j) const;
  std::size_t inverse_index(std::size_t i) const;
  bool commute(std::size_t i, std::size_t j) const;
  std::vector<std::size_t> generator_indices() const;

private:
  struct Packed {
    std::uint8_t perm = 0;
    std::array<std::uint32_t, 3> ph{};
  };

  Packed pack(const MonomialElement& e) const;
  MonomialElement unpack(const Packed& p) const;
  Packed mul(const Packed& a, const Packed& b) const;
  static std::uint64_t key(const Packed& p);
  void finish();

  std::vector<MonomialElement> elements_;
  std::vector<MonomialElement> generators_;
  std::vector<Perm3> perm_image_;
  std::size_t diagonal_order_ = 0;
  std::int64_t denom_ = 1;
  std::vector<Packed> packed_;
  std::unordered_map<std::uint64_t, std::uint32_t> lookup_;
  // Start of each permutation's block in the sorted element list (size 7).
  std::array<std::size_t, 7> perm_block_{};

  friend std::uint64_t commuting_pair_count(const FiniteMonomialGroup& g);
};

struct ConjugacyPartition {
  /// Element indices; classes ordered by least member, members ascending.
  std::vector<std::vector<std::size_t>> classes;
  std::size_t class_count() const { return classes.size(); }
};

FiniteMonomialGroup closure(const GroupSpec& spec,
                            std::size_t cap = kDefaultClosureCap);

/// Generators of the five monomial families: I <H,S>, II <H,H',S>,
/// III <H,S,T>, IV <H,S,T,C>, V <C,S>, with H = 1/r(0,1,-1),
/// H' = 1/r(1,-1,0), C = 1/3(1,1,1). Trivial generators are omitted.
GroupSpec standard_group(Case kind, int r);

/// Standard generators S, T and C.
MonomialElement generator_S();
MonomialElement generator_T();
MonomialElement generator_C();

/// Subgroup of elements with identity permutation (normality and
/// commutativity are checked, Errc::Arithmetic on failure).
FiniteMonomialGroup diagonal_subgroup(const FiniteMonomialGroup& g);

ConjugacyPartition conjugacy_classes(const FiniteMonomialGroup& g);

/// #{(x,y) in G x G : xy = yx}, by exhaustive pair testing.
std::uint64_t commuting_pair_count(const FiniteMonomialGroup& g);

/// Complex dimension of the common fixed subspace of the given elements.
int fixed_subspace_dim(std::span<const MonomialElement> elems);

/// Orbifold Euler number of (C^3, G). Every common fixed set is a linear
/// subspace, so this is commuting pairs / |G|; the value is cross-checked
/// against the conjugacy class count.
std::int64_t orbifold_euler(const FiniteMonomialGroup& g);

CaseTag classify(const FiniteMonomialGroup& g);

} // namespace mckay

template <> struct std::hash<mckay::MonomialElement> {
  std::size_t operator()(const mckay::MonomialElement& e) const noexcept {
    std::size_t h = static_cast<std::size_t>(e.perm.index());
    for (const auto& q : e.phases)
      h = h * 1000003u ^ std::hash<mckay::Rat>()(q);
    return h;
  }
};

#endif
