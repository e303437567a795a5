#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace binmat {

/// A vector of F_2^n, packed into the low n bits of a machine word.
/// Addition is XOR; the ambient dimension n is carried by the containing object.
using Vec = std::uint32_t;

/// Highest set bit position; v must be nonzero.
int pivot_bit(Vec v);

/// A subset of F_2^n as a packed bitset of length 2^n.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(int n);

    static PointSet full(int n);           // all 2^n vectors
    static PointSet all_points(int n);     // all nonzero vectors (the points of the geometry)
    static PointSet singleton(int n, Vec v);

    int dim() const { return n_; }
    std::uint64_t universe() const { return std::uint64_t(1) << n_; }

    bool test(Vec v) const { return (words_[v >> 6] >> (v & 63)) & 1; }
    void set(Vec v) { words_[v >> 6] |= std::uint64_t(1) << (v & 63); }
    void reset(Vec v) { words_[v >> 6] &= ~(std::uint64_t(1) << (v & 63)); }

    std::uint64_t count() const;
    bool any() const;
    bool none() const { return !any(); }

    PointSet& operator&=(const PointSet& o);
    PointSet& operator|=(const PointSet& o);
    PointSet& operator-=(const PointSet& o);  // set difference
    friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
    friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
    friend PointSet operator-(PointSet a, const PointSet& b) { return a -= b; }
    friend bool operator==(const PointSet& a, const PointSet& b) = default;

    /// The translate {x + a : x in this} (an index permutation of the bitset).
    PointSet translated(Vec a) const;
    PointSet complemented() const;  // full universe minus this

    bool is_subset_of(const PointSet& o) const;
    bool intersects(const PointSet& o) const;

    std::optional<Vec> min_element() const;
    void for_each(const std::function<void(Vec)>& fn) const;  // ascending
    std::vector<Vec> to_vector() const;

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_{1};
};

/// A linear subspace of F_2^n held as its reduced-echelon basis: pivot bits
/// strictly decreasing, every pivot bit absent from the other basis vectors.
/// The form is unique per subspace, so equality and ordering are basis-wise.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(int n) : n_(n) {}

    static Subspace zero(int n) { return Subspace(n); }
    static Subspace full(int n);
    static Subspace span_of(int n, const std::vector<Vec>& gens);

    int ambient() const { return n_; }
    int dim() const { return int(basis_.size()); }
    int codim() const { return n_ - dim(); }
    const std::vector<Vec>& basis() const { return basis_; }

    /// Eliminates every pivot bit; the result is the unique minimum element of
    /// the coset v + this, so reduce(v) == 0 iff v is a member.
    Vec reduce(Vec v) const;
    bool contains(Vec v) const { return reduce(v) == 0; }

    /// Adjoins v; returns true iff the dimension grew.
    bool insert(Vec v);

    /// Intersection with the kernel of the character w (dot-product parity).
    /// Drops the dimension by one when w is nontrivial on the subspace.
    Subspace intersect_kernel(Vec w) const;

    Vec pivot_mask() const;
    std::vector<int> free_positions() const;  // non-pivot coordinates, ascending

    /// Coordinates of a member w.r.t. the echelon basis (bit i <-> basis()[i]).
    Vec coords(Vec member) const;
    /// Inverse of coords: combination of basis vectors selected by the bits of c.
    Vec lift(Vec c) const;

    void for_each_element(const std::function<void(Vec)>& fn) const;  // all 2^dim, Gray order

    friend bool operator==(const Subspace& a, const Subspace& b) = default;
    /// Lexicographic on the canonical basis sequence (shorter-dim compares by sequence).
    static bool basis_less(const Subspace& a, const Subspace& b);

private:
    int n_ = 0;
    std::vector<Vec> basis_;  // values strictly decreasing (= pivots strictly decreasing)
};

/// A coset space + shift, with shift canonicalized to the minimum element of
/// the coset (equivalently: all pivot bits of the space cleared).
struct AffineFlat {
    Subspace space;
    Vec shift = 0;

    AffineFlat() = default;
    AffineFlat(Subspace s, Vec v) : space(std::move(s)) { shift = space.reduce(v); }

    bool is_linear() const { return shift == 0; }
    int dim() const { return space.dim(); }
    bool contains(Vec v) const { return space.contains(v ^ shift); }
    PointSet points() const;  // all 2^dim elements of the coset (0 kept if present)

    friend bool operator==(const AffineFlat& a, const AffineFlat& b) = default;
};

// --- core operations -------------------------------------------------------

/// Minimal subspace containing every member of `points`; closure({}) = zero.
Subspace closure(const PointSet& points);

/// The 2^dim - 1 nonzero vectors of the subspace (its projective flat).
PointSet flat_points(const Subspace& space);

/// All 2^(n-dim) cosets, canonical shifts ascending; the coset of 0 first.
std::vector<AffineFlat> cosets(const Subspace& space);

/// Deterministic complement: span of the standard vectors at the non-pivot
/// coordinates of the echelon basis. dim + dim(result) = n, intersection {0}.
Subspace complement_flat(const Subspace& space);

/// Maximum-dimension subspace with every element (including 0) in s, or none
/// when 0 is not in s. Ties broken by lexicographically least canonical basis.
std::optional<Subspace> largest_subspace_in(const PointSet& s);

/// Maximum-dimension affine flat fully inside s; none iff s is empty.
/// Ties broken by least (canonical basis, shift).
std::optional<AffineFlat> largest_affine_in(const PointSet& s);

/// Least-basis subspace of dimension exactly d with all elements in s, if any.
std::optional<Subspace> find_subspace_in(const PointSet& s, int d);

/// Some subspace of dimension d inside s that contains `anchor`, or none.
std::optional<Subspace> find_anchored_subspace_in(const PointSet& s, Vec anchor, int d);

/// Every subspace of dimension d of F_2^n, one call per subspace
/// (enumerated by echelon pivot pattern; each appears exactly once).
void for_each_subspace(int n, int d, const std::function<void(const Subspace&)>& fn);

}  // namespace binmat
