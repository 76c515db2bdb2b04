#include "bellmat/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace bellmat {

namespace {
long ipow(long base, int e) {
    long out = 1;
    for (int k = 0; k < e; ++k) out *= base;
    return out;
}
const PhaseScalar kZero{};
} // namespace

IndexSpace IndexSpace::composite(int n_qubits) {
    return {static_cast<int>(ipow(2, n_qubits)) - 1, 1};
}

long IndexSpace::dim() const { return ipow(local_dim(), factors); }

int IndexSpace::index_of(HalfInt m) const {
    int d = local_twice_j - m.twice;
    if (d < 0 || d > 2 * local_twice_j || d % 2 != 0)
        throw std::out_of_range("label " + m.str() + " not in spin-" +
                                HalfInt(local_twice_j).str() + " space");
    return d / 2;
}

long IndexSpace::flat(const std::vector<HalfInt>& labels) const {
    if (static_cast<int>(labels.size()) != factors)
        throw std::invalid_argument("label count != factor count");
    long acc = 0;
    for (const HalfInt& m : labels) acc = acc * local_dim() + index_of(m);
    return acc;
}

std::vector<HalfInt> IndexSpace::labels(long flat) const {
    std::vector<HalfInt> out(factors);
    for (int i = factors - 1; i >= 0; --i) {
        out[i] = label_of(static_cast<int>(flat % local_dim()));
        flat /= local_dim();
    }
    return out;
}

std::string EntryWitness::str() const {
    std::ostringstream os;
    os << "row " << row + 1 << ", col " << col + 1 << ": " << lhs << " vs "
       << rhs;
    return os.str();
}

Operator Operator::identity(long dim) {
    Operator out(dim, dim);
    for (long k = 0; k < dim; ++k) out.data_[k][k] = PhaseScalar::one();
    return out;
}

Operator Operator::permutation(long d) {
    Operator out(d * d, d * d);
    for (long a = 0; a < d; ++a)
        for (long b = 0; b < d; ++b)
            out.data_[b * d + a][a * d + b] = PhaseScalar::one();
    return out;
}

long Operator::nnz() const {
    long n = 0;
    for (const auto& [r, row] : data_) n += static_cast<long>(row.size());
    return n;
}

const PhaseScalar& Operator::at(long r, long c) const {
    auto it = data_.find(r);
    if (it == data_.end()) return kZero;
    auto jt = it->second.find(c);
    return jt == it->second.end() ? kZero : jt->second;
}

void Operator::set(long r, long c, PhaseScalar v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("matrix entry out of range");
    if (v.is_zero()) {
        auto it = data_.find(r);
        if (it != data_.end()) {
            it->second.erase(c);
            if (it->second.empty()) data_.erase(it);
        }
    } else {
        data_[r][c] = std::move(v);
    }
}

void Operator::add(long r, long c, const PhaseScalar& v) {
    set(r, c, at(r, c) + v);
}

Operator Operator::operator+(const Operator& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix shape mismatch in +");
    Operator out = *this;
    for (const auto& [r, row] : o.data_)
        for (const auto& [c, v] : row) out.add(r, c, v);
    return out;
}

Operator Operator::operator-(const Operator& o) const { return *this + -o; }

Operator Operator::operator-() const {
    Operator out(rows_, cols_);
    for (const auto& [r, row] : data_)
        for (const auto& [c, v] : row) out.data_[r][c] = -v;
    return out;
}

Operator Operator::operator*(const Operator& o) const {
    if (cols_ != o.rows_)
        throw std::invalid_argument("matrix shape mismatch in *");
    Operator out(rows_, o.cols_);
    for (const auto& [r, row] : data_) {
        for (const auto& [k, a] : row) {
            auto it = o.data_.find(k);
            if (it == o.data_.end()) continue;
            for (const auto& [c, b] : it->second) out.add(r, c, a * b);
        }
    }
    return out;
}

Operator Operator::scaled(const PhaseScalar& s) const {
    if (s.is_zero()) return Operator(rows_, cols_);
    Operator out(rows_, cols_);
    for (const auto& [r, row] : data_)
        for (const auto& [c, v] : row) out.data_[r][c] = s * v;
    return out;
}

bool Operator::operator==(const Operator& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Operator Operator::transpose() const {
    Operator out(cols_, rows_);
    for (const auto& [r, row] : data_)
        for (const auto& [c, v] : row) out.data_[c][r] = v;
    return out;
}

Operator Operator::conj_entries() const {
    Operator out(rows_, cols_);
    for (const auto& [r, row] : data_)
        for (const auto& [c, v] : row) out.data_[r][c] = v.conj();
    return out;
}

Operator Operator::dagger() const { return transpose().conj_entries(); }

Operator Operator::kron(const Operator& o) const {
    Operator out(rows_ * o.rows_, cols_ * o.cols_);
    for (const auto& [r1, row1] : data_)
        for (const auto& [c1, v1] : row1)
            for (const auto& [r2, row2] : o.data_)
                for (const auto& [c2, v2] : row2)
                    out.data_[r1 * o.rows_ + r2][c1 * o.cols_ + c2] = v1 * v2;
    return out;
}

std::optional<EntryWitness> Operator::first_difference(const Operator& a,
                                                       const Operator& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        return EntryWitness{0, 0, "shape " + std::to_string(a.rows_) + "x" +
                                      std::to_string(a.cols_),
                            "shape " + std::to_string(b.rows_) + "x" +
                                std::to_string(b.cols_)};
    auto ra = a.data_.begin();
    auto rb = b.data_.begin();
    while (ra != a.data_.end() || rb != b.data_.end()) {
        long r;
        const Row *rowa = nullptr, *rowb = nullptr;
        if (rb == b.data_.end() ||
            (ra != a.data_.end() && ra->first <= rb->first))
            r = ra->first;
        else
            r = rb->first;
        if (ra != a.data_.end() && ra->first == r) rowa = &ra->second;
        if (rb != b.data_.end() && rb->first == r) rowb = &rb->second;
        static const Row kEmpty;
        const Row& qa = rowa ? *rowa : kEmpty;
        const Row& qb = rowb ? *rowb : kEmpty;
        auto ca = qa.begin();
        auto cb = qb.begin();
        while (ca != qa.end() || cb != qb.end()) {
            long c;
            if (cb == qb.end() || (ca != qa.end() && ca->first <= cb->first))
                c = ca->first;
            else
                c = cb->first;
            const PhaseScalar& va = (ca != qa.end() && ca->first == c)
                                        ? ca->second
                                        : kZero;
            const PhaseScalar& vb = (cb != qb.end() && cb->first == c)
                                        ? cb->second
                                        : kZero;
            if (!(va == vb)) return EntryWitness{r, c, va.str(), vb.str()};
            if (ca != qa.end() && ca->first == c) ++ca;
            if (cb != qb.end() && cb->first == c) ++cb;
        }
        if (rowa) ++ra;
        if (rowb) ++rb;
    }
    return std::nullopt;
}

Eigen::MatrixXcd Operator::evaluate(const PhaseAssignment& phi) const {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(rows_, cols_);
    for (const auto& [r, row] : data_)
        for (const auto& [c, v] : row) out(r, c) = v.evaluate(phi);
    return out;
}

Eigen::SparseMatrix<std::complex<double>>
Operator::evaluate_sparse(const PhaseAssignment& phi) const {
    std::vector<Eigen::Triplet<std::complex<double>>> trips;
    trips.reserve(nnz());
    for (const auto& [r, row] : data_)
        for (const auto& [c, v] : row)
            trips.emplace_back(static_cast<int>(r), static_cast<int>(c),
                               v.evaluate(phi));
    Eigen::SparseMatrix<std::complex<double>> out(rows_, cols_);
    out.setFromTriplets(trips.begin(), trips.end());
    return out;
}

std::string Operator::str() const {
    std::ostringstream os;
    os << rows_ << "x" << cols_ << " matrix, " << nnz() << " nonzero\n";
    for (const auto& [r, row] : data_)
        for (const auto& [c, v] : row)
            os << "  [" << r + 1 << "," << c + 1 << "] " << v.str() << "\n";
    return os.str();
}

Operator operator*(const PhaseScalar& s, const Operator& op) {
    return op.scaled(s);
}

Operator lift(const Operator& local, long local_dim, int local_factors,
              int n_factors, int pos) {
    if (local.rows() != ipow(local_dim, local_factors) ||
        local.cols() != local.rows())
        throw std::invalid_argument("lift: local operator shape mismatch");
    if (pos < 0 || pos + local_factors > n_factors)
        throw std::invalid_argument("lift: position out of range");
    Operator left = Operator::identity(ipow(local_dim, pos));
    Operator right =
        Operator::identity(ipow(local_dim, n_factors - pos - local_factors));
    return left.kron(local).kron(right);
}

StateVector StateVector::basis(long dim, long k) {
    StateVector v(dim);
    v.set(k, PhaseScalar::one());
    return v;
}

const PhaseScalar& StateVector::at(long k) const {
    auto it = amps_.find(k);
    return it == amps_.end() ? kZero : it->second;
}

void StateVector::set(long k, PhaseScalar v) {
    if (k < 0 || k >= dim_) throw std::out_of_range("amplitude out of range");
    if (v.is_zero())
        amps_.erase(k);
    else
        amps_[k] = std::move(v);
}

void StateVector::add(long k, const PhaseScalar& v) { set(k, at(k) + v); }

StateVector StateVector::operator+(const StateVector& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("vector dim mismatch");
    StateVector out = *this;
    for (const auto& [k, v] : o.amps_) out.add(k, v);
    return out;
}

StateVector StateVector::operator-(const StateVector& o) const {
    return *this + o.scaled(-PhaseScalar::one());
}

StateVector StateVector::scaled(const PhaseScalar& s) const {
    StateVector out(dim_);
    if (s.is_zero()) return out;
    for (const auto& [k, v] : amps_) out.amps_[k] = s * v;
    return out;
}

bool StateVector::operator==(const StateVector& o) const {
    return dim_ == o.dim_ && amps_ == o.amps_;
}

Eigen::VectorXcd StateVector::evaluate(const PhaseAssignment& phi) const {
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dim_);
    for (const auto& [k, v] : amps_) out(k) = v.evaluate(phi);
    return out;
}

std::string StateVector::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : amps_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << v.str() << ")|" << k << ">";
    }
    return first ? "0" : os.str();
}

StateVector operator*(const Operator& op, const StateVector& v) {
    if (op.cols() != v.dim())
        throw std::invalid_argument("operator/vector dim mismatch");
    StateVector out(op.rows());
    for (const auto& [r, row] : op.data()) {
        PhaseScalar acc;
        for (const auto& [c, a] : row) {
            const PhaseScalar& x = v.at(c);
            if (!x.is_zero()) acc += a * x;
        }
        if (!acc.is_zero()) out.set(r, acc);
    }
    return out;
}

PhaseScalar inner(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("vector dim mismatch in inner");
    PhaseScalar acc;
    for (const auto& [k, va] : a.amplitudes()) {
        const PhaseScalar& vb = b.at(k);
        if (!vb.is_zero()) acc += va.conj() * vb;
    }
    return acc;
}

Operator reduced_density(const StateVector& psi, long local_dim, int factors,
                         int site) {
    if (psi.dim() != ipow(local_dim, factors))
        throw std::invalid_argument("state dim != local_dim^factors");
    if (site < 0 || site >= factors)
        throw std::invalid_argument("site out of range");
    long stride = ipow(local_dim, factors - 1 - site);
    Operator rho(local_dim, local_dim);
    for (const auto& [k1, v1] : psi.amplitudes()) {
        long a = (k1 / stride) % local_dim;
        long rest1 = k1 - a * stride;
        for (const auto& [k2, v2] : psi.amplitudes()) {
            long b = (k2 / stride) % local_dim;
            if (k2 - b * stride != rest1) continue;
            rho.add(a, b, v1 * v2.conj());
        }
    }
    return rho;
}

} // namespace bellmat
