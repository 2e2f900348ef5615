#pragma once

#include "logdeg/scalar.hpp"

#include <map>
#include <string>
#include <vector>

namespace logdeg {

// Integer partitions and r-tuples of them: the index algebra of the
// Nakajima-type basis.  Coefficients m, Aut and the sign live here and are
// the single source of truth for the assembler.

struct Partition {
    std::vector<Int> parts;  // weakly decreasing, positive

    Partition() = default;
    explicit Partition(std::vector<Int> p);
    static Partition of(std::vector<long> p);

    Int size() const;
    size_t length() const { return parts.size(); }
    bool operator==(const Partition& o) const { return parts == o.parts; }
    bool operator<(const Partition& o) const { return parts < o.parts; }
    std::string to_string() const;
};

std::vector<Partition> partitions_of(const Int& n);
Int partition_count(const Int& n);

struct PartitionTuple {
    std::vector<Partition> entries;

    bool operator==(const PartitionTuple& o) const { return entries == o.entries; }
    bool operator<(const PartitionTuple& o) const { return entries < o.entries; }
    std::vector<Int> sizes() const;
    Int total_size() const;
    size_t total_length() const;
    std::string to_string() const;
};

// All tuples with entry i a partition of n[i].
std::vector<PartitionTuple> tuples_of(const std::vector<Int>& n);

Int m_of(const Partition& mu);        // product of parts
Int m_of(const PartitionTuple& mu);
int sign_of(const Partition& mu, const Int& n);  // (-1)^(n - length)
int sign_of(const PartitionTuple& mu);
Int aut_of(const Partition& mu);      // prod over part values of multiplicity!
Int aut_of(const PartitionTuple& mu);

// --- weighted tuples and formal vectors -----------------------------------

struct WeightedPartitionTuple {
    PartitionTuple tuple;
    std::vector<std::string> labels;  // one class label per tuple entry

    bool operator==(const WeightedPartitionTuple& o) const {
        return tuple == o.tuple && labels == o.labels;
    }
    bool operator<(const WeightedPartitionTuple& o) const {
        if (tuple < o.tuple) return true;
        if (o.tuple < tuple) return false;
        return labels < o.labels;
    }
    std::string to_string() const;
};

// Finite linear combination with exact rational coefficients; zero terms are
// pruned on insertion.
template <typename Basis>
struct FormalVector {
    std::map<Basis, Rat> terms;

    void add(const Basis& b, const Rat& c) {
        if (c == 0) return;
        auto it = terms.find(b);
        if (it == terms.end()) {
            terms[b] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }
};

// One Kunneth pair of class labels with its coefficient.
struct LabelPair {
    std::string left, right;
    Rat coeff;
};

// Pairing table: per tuple entry (boundary divisor), the list of dual label
// pairs.  The default table has the single (unit, point) resolution per
// factor, which is all the worked examples need.
struct PairingTable {
    std::vector<std::vector<LabelPair>> factors;

    static PairingTable trivial(size_t r);
};

using DiagonalTerm = std::pair<WeightedPartitionTuple, WeightedPartitionTuple>;

// The formal diagonal: sum over mu of (-1)^mu / (Aut(mu) m_mu) sum_j
// mu(dL_j) (x) mu(dR_j).
FormalVector<DiagonalTerm> diagonal_decomposition(const std::vector<Int>& n, const PairingTable& pairing);

// Verifies the inverse identity: composing Gamma (with Gamma^tr Gamma
// diagonal of entries (-1)^mu m_mu, zero off the diagonal) with the claimed
// inverse (+)(-1)^mu/m_mu Gamma^tr yields the identity matrix over the
// partition-tuple basis of sizes n.
bool gamma_inverse_check(const std::vector<Int>& n);

}  // namespace logdeg
