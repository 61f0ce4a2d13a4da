#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

namespace regorb {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(int n);

// Permutation of {0..n-1}. Products read left to right: (a*b)(i) = b(a(i)).
struct Permutation {
    std::vector<int> img;

    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);
    static Permutation transposition(int n, int i, int j);
    // Cycles given as lists of points.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    int degree() const { return static_cast<int>(img.size()); }
    int operator()(int i) const { return img[i]; }
    Permutation operator*(const Permutation& o) const;
    bool operator==(const Permutation& o) const { return img == o.img; }
    bool operator!=(const Permutation& o) const { return img != o.img; }
    bool operator<(const Permutation& o) const { return img < o.img; }
    Permutation inverse() const;
    // h^-1 * this * h
    Permutation conjugate(const Permutation& h) const;
    bool is_identity() const;
    bool is_even() const;
    std::uint64_t order() const;
    std::vector<std::vector<int>> cycles() const;
    std::string str() const;
};

using CycleType = std::vector<int>;  // weakly decreasing

CycleType cycle_type(const Permutation& g);
std::vector<CycleType> all_cycle_types(int n);
BigInt class_size_sn(int n, const CycleType& t);
// Canonical representative: cycles filled with ascending points, longest cycles first.
Permutation class_representative(int n, const CycleType& t);
bool splits_in_an(const CycleType& t);

enum class GroupKind { Sn, An, External };

struct ClassRep {
    Permutation rep;
    BigInt size_in_group;
    std::uint64_t element_order = 1;
};

// One representative per class of prime-order elements of S_n or A_n.
std::vector<ClassRep> prime_order_class_reps(int n, GroupKind group);
// Every class (identity included), for trace comparisons.
std::vector<ClassRep> all_class_reps(int n, GroupKind group);

std::vector<Permutation> coxeter_generators(int n);
// s_i s_{i+1}, i = 1..n-2, which generate A_n.
std::vector<Permutation> an_generators(int n);
// Indices i (0-based, s_i = (i i+1)) with g = s_{w0} * s_{w1} * ...
std::vector<int> coxeter_word(const Permutation& g);

struct GroupDescriptor {
    GroupKind kind = GroupKind::Sn;
    int n = 0;
    std::string name;
    BigInt base_order;                           // |H|
    std::uint64_t center_order = 1;              // |Z(H)|
    std::vector<std::vector<int>> center_words;  // words in 0-based generator indices
    std::uint32_t scalar_order = 1;              // a = |A|, A <= F_p^*
    std::uint32_t scalar_overlap = 1;            // |rho(Z(H)) ∩ A|

    static GroupDescriptor symmetric(int n);
    static GroupDescriptor alternating(int n);
    static GroupDescriptor external(const std::string& name, const BigInt& order, std::uint64_t center);
    std::string display_name() const;
};

// |<rho(H), A>| = |H| a / overlap.
BigInt group_order(const GroupDescriptor& g, std::uint32_t p);

}  // namespace regorb
