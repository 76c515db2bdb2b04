#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "bellmat/scalar.hpp"

namespace bellmat {

/// Tensor power of a single spin space. Local basis is ordered by descending
/// label: index 0 holds m = J and index 2J holds m = -J, so negating every
/// label mirrors the flat index (flat -> dim-1-flat).
struct IndexSpace {
    int local_twice_j = 1; ///< 2J of one factor
    int factors = 1;

    static IndexSpace spin(HalfInt j, int factors = 1) {
        return {j.twice, factors};
    }
    /// N qubits reread as one spin with 2J = 2^N - 1; the flat index of a
    /// qubit string equals the index of its composite label.
    static IndexSpace composite(int n_qubits);

    long local_dim() const { return local_twice_j + 1; }
    long dim() const;

    int index_of(HalfInt m) const;
    HalfInt label_of(int idx) const { return HalfInt(local_twice_j - 2 * idx); }

    long flat(const std::vector<HalfInt>& labels) const;
    std::vector<HalfInt> labels(long flat) const;
    long mirror(long flat) const { return dim() - 1 - flat; }
};

/// First entry (lexicographic in row, col) at which two matrices differ,
/// carrying both exact values in printable form.
struct EntryWitness {
    long row = 0;
    long col = 0;
    std::string lhs;
    std::string rhs;
    std::string str() const;
};

/// Sparse matrix over PhaseScalar. Rows hold only nonzero entries, so
/// structural equality of the maps is exact equality of matrices.
class Operator {
public:
    using Row = std::map<long, PhaseScalar>;
    using Data = std::map<long, Row>;

    Operator() = default;
    Operator(long rows, long cols) : rows_(rows), cols_(cols) {}

    static Operator identity(long dim);
    static Operator zero(long rows, long cols) { return {rows, cols}; }
    /// Swap of two adjacent factors: P|a,b> = |b,a> on a d*d space.
    static Operator permutation(long local_dim);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    long nnz() const;
    const Data& data() const { return data_; }

    const PhaseScalar& at(long r, long c) const;
    void set(long r, long c, PhaseScalar v);
    void add(long r, long c, const PhaseScalar& v);

    Operator operator+(const Operator& o) const;
    Operator operator-(const Operator& o) const;
    Operator operator-() const;
    Operator operator*(const Operator& o) const;
    Operator scaled(const PhaseScalar& s) const;

    bool operator==(const Operator& o) const;

    Operator dagger() const;
    Operator transpose() const;
    Operator conj_entries() const;
    Operator kron(const Operator& o) const;

    bool is_identity() const { return *this == identity(rows_); }
    bool is_zero() const { return data_.empty(); }

    /// Entrywise map, dropping zeros.
    template <typename F> Operator map_entries(F&& f) const {
        Operator out(rows_, cols_);
        for (const auto& [r, row] : data_)
            for (const auto& [c, v] : row) out.set(r, c, f(r, c, v));
        return out;
    }

    static std::optional<EntryWitness> first_difference(const Operator& a,
                                                        const Operator& b);

    Eigen::MatrixXcd evaluate(const PhaseAssignment& phi = {}) const;
    Eigen::SparseMatrix<std::complex<double>>
    evaluate_sparse(const PhaseAssignment& phi = {}) const;

    std::string str() const;

private:
    long rows_ = 0, cols_ = 0;
    Data data_;
};

Operator operator*(const PhaseScalar& s, const Operator& op);

/// Embed `local` (acting on `local_factors` adjacent copies of a d-dim space)
/// at position `pos` (0-based) inside `n_factors` copies.
Operator lift(const Operator& local, long local_dim, int local_factors,
              int n_factors, int pos);

/// Sparse exact column vector.
class StateVector {
public:
    StateVector() = default;
    explicit StateVector(long dim) : dim_(dim) {}
    static StateVector basis(long dim, long k);

    long dim() const { return dim_; }
    const std::map<long, PhaseScalar>& amplitudes() const { return amps_; }

    const PhaseScalar& at(long k) const;
    void set(long k, PhaseScalar v);
    void add(long k, const PhaseScalar& v);

    StateVector operator+(const StateVector& o) const;
    StateVector operator-(const StateVector& o) const;
    StateVector scaled(const PhaseScalar& s) const;
    bool operator==(const StateVector& o) const;

    Eigen::VectorXcd evaluate(const PhaseAssignment& phi = {}) const;
    std::string str() const;

private:
    long dim_ = 0;
    std::map<long, PhaseScalar> amps_;
};

StateVector operator*(const Operator& op, const StateVector& v);

/// <a|b> with conjugation on the left argument.
PhaseScalar inner(const StateVector& a, const StateVector& b);

/// Reduced density matrix of factor `site` (0-based) of a pure state living
/// on `factors` copies of a local_dim-dimensional space.
Operator reduced_density(const StateVector& psi, long local_dim, int factors,
                         int site);

} // namespace bellmat
