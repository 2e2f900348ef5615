#include "logdeg/partition.hpp"

#include "logdeg/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace logdeg {

Partition::Partition(std::vector<Int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

Partition Partition::of(std::vector<long> p) {
    std::vector<Int> q(p.begin(), p.end());
    return Partition(std::move(q));
}

Int Partition::size() const {
    Int s = 0;
    for (const auto& p : parts) s += p;
    return s;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
    os << ")";
    return os.str();
}

namespace {

void gen_partitions(const Int& n, const Int& max_part, std::vector<Int>& cur,
                    std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(cur));
        return;
    }
    Int top = std::min(n, max_part);
    for (Int k = top; k >= 1; --k) {
        cur.push_back(k);
        gen_partitions(n - k, k, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(const Int& n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative size");
    std::vector<Partition> out;
    std::vector<Int> cur;
    gen_partitions(n, n == 0 ? Int(1) : n, cur, out);
    return out;
}

Int partition_count(const Int& n) { return Int(partitions_of(n).size()); }

std::vector<Int> PartitionTuple::sizes() const {
    std::vector<Int> out;
    for (const auto& p : entries) out.push_back(p.size());
    return out;
}

Int PartitionTuple::total_size() const {
    Int s = 0;
    for (const auto& p : entries) s += p.size();
    return s;
}

size_t PartitionTuple::total_length() const {
    size_t s = 0;
    for (const auto& p : entries) s += p.length();
    return s;
}

std::string PartitionTuple::to_string() const {
    std::ostringstream os;
    if (entries.size() == 1) return entries[0].to_string();
    os << "(";
    for (size_t i = 0; i < entries.size(); ++i) os << (i ? "," : "") << entries[i].to_string();
    os << ")";
    return os.str();
}

std::vector<PartitionTuple> tuples_of(const std::vector<Int>& n) {
    std::vector<PartitionTuple> out = {PartitionTuple{}};
    for (const auto& ni : n) {
        std::vector<PartitionTuple> next;
        for (const auto& t : out)
            for (const auto& p : partitions_of(ni)) {
                PartitionTuple u = t;
                u.entries.push_back(p);
                next.push_back(std::move(u));
            }
        out = std::move(next);
    }
    return out;
}

Int m_of(const Partition& mu) {
    Int m = 1;
    for (const auto& p : mu.parts) m *= p;
    return m;
}

Int m_of(const PartitionTuple& mu) {
    Int m = 1;
    for (const auto& p : mu.entries) m *= m_of(p);
    return m;
}

int sign_of(const Partition& mu, const Int& n) {
    Int e = n - Int(mu.length());
    return mpz_even_p(e.get_mpz_t()) ? 1 : -1;
}

int sign_of(const PartitionTuple& mu) {
    int s = 1;
    for (const auto& p : mu.entries) s *= sign_of(p, p.size());
    return s;
}

Int aut_of(const Partition& mu) {
    Int a = 1;
    size_t i = 0;
    while (i < mu.parts.size()) {
        size_t j = i;
        while (j < mu.parts.size() && mu.parts[j] == mu.parts[i]) ++j;
        Int f = 1;
        for (size_t k = 2; k <= j - i; ++k) f *= Int(k);
        a *= f;
        i = j;
    }
    return a;
}

Int aut_of(const PartitionTuple& mu) {
    Int a = 1;
    for (const auto& p : mu.entries) a *= aut_of(p);
    return a;
}

std::string WeightedPartitionTuple::to_string() const {
    std::ostringstream os;
    os << tuple.to_string();
    bool nontrivial = false;
    for (const auto& l : labels)
        if (!l.empty() && l != "1") nontrivial = true;
    if (nontrivial) {
        os << "[";
        for (size_t i = 0; i < labels.size(); ++i) os << (i ? "," : "") << labels[i];
        os << "]";
    }
    return os.str();
}

PairingTable PairingTable::trivial(size_t r) {
    PairingTable t;
    t.factors.assign(r, {LabelPair{"1", "1", Rat(1)}});
    return t;
}

FormalVector<DiagonalTerm> diagonal_decomposition(const std::vector<Int>& n,
                                                  const PairingTable& pairing) {
    if (pairing.factors.size() != n.size())
        throw std::invalid_argument("diagonal_decomposition: pairing table has wrong arity");
    FormalVector<DiagonalTerm> out;
    for (const auto& mu : tuples_of(n)) {
        Rat coeff = Rat(sign_of(mu)) / Rat(aut_of(mu) * m_of(mu));
        // Kunneth indices: one label pair per factor, all combinations.
        std::vector<size_t> idx(n.size(), 0);
        for (;;) {
            Rat c = coeff;
            WeightedPartitionTuple left, right;
            left.tuple = mu;
            right.tuple = mu;
            for (size_t i = 0; i < n.size(); ++i) {
                const LabelPair& lp = pairing.factors[i].at(idx[i]);
                left.labels.push_back(lp.left);
                right.labels.push_back(lp.right);
                c *= lp.coeff;
            }
            out.add({left, right}, c);
            // advance the multi-index
            size_t k = 0;
            while (k < n.size()) {
                if (++idx[k] < pairing.factors[k].size()) break;
                idx[k] = 0;
                ++k;
            }
            if (k == n.size()) break;
            if (n.empty()) break;
        }
        if (n.empty()) break;
    }
    return out;
}

bool gamma_inverse_check(const std::vector<Int>& n) {
    auto basis = tuples_of(n);
    size_t N = basis.size();
    // Gamma^tr Gamma is diagonal with entries (-1)^mu m_mu; the claimed
    // inverse contributes (-1)^mu / m_mu on the same index.  The product must
    // be the identity over the whole basis.
    MatQ composed(N, N);
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j) {
            Rat gtg = (i == j) ? Rat(sign_of(basis[i])) * Rat(m_of(basis[i])) : Rat(0);
            Rat inv_coeff = Rat(sign_of(basis[i])) / Rat(m_of(basis[i]));
            composed.at(i, j) = inv_coeff * gtg;
        }
    return composed == MatQ::identity(N);
}

}  // namespace logdeg
