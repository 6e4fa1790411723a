#include "chainmail/homology.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

namespace chainmail {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols, std::initializer_list<long> values)
    : IntegerMatrix(rows, cols)
{
    if (values.size() != rows * cols)
        throw InputError("initializer size does not match the matrix shape");
    std::size_t i = 0;
    for (long v : values)
        data_[i++] = v;
}

IntegerMatrix IntegerMatrix::identity(std::size_t n)
{
    IntegerMatrix I(n, n);
    for (std::size_t i = 0; i < n; ++i)
        I.at(i, i) = 1;
    return I;
}

bool IntegerMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const mpz_class& v) { return v == 0; });
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw InputError("matrix shapes do not compose");
    IntegerMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const mpz_class& x = a.at(i, k);
            if (x == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                out.at(i, j) += x * b.at(k, j);
        }
    return out;
}

bool operator==(const IntegerMatrix& a, const IntegerMatrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

void SparseIntegerMatrix::add(std::size_t r, std::size_t c, std::int64_t value)
{
    if (r >= rows_ || c >= columns_.size())
        throw InputError("sparse entry out of range");
    if (value == 0)
        return;
    auto& col = columns_[c];
    auto row = static_cast<std::uint32_t>(r);
    auto it = std::lower_bound(col.begin(), col.end(), row,
                               [](const Entry& e, std::uint32_t key) { return e.first < key; });
    if (it != col.end() && it->first == row) {
        it->second += value;
        if (it->second == 0)
            col.erase(it);
    } else {
        col.insert(it, {row, value});
    }
}

IntegerMatrix SparseIntegerMatrix::to_dense() const
{
    IntegerMatrix M(rows_, columns_.size());
    for (std::size_t c = 0; c < columns_.size(); ++c)
        for (auto [r, v] : columns_[c])
            M.at(r, c) = static_cast<long>(v);
    return M;
}

namespace {

// Dense Smith reduction in place; `left`/`right` accumulate the row and
// column operations when given.
class DenseSmith {
public:
    DenseSmith(IntegerMatrix& a, IntegerMatrix* left, IntegerMatrix* right)
        : a_(a), left_(left), right_(right)
    {
    }

    SmithForm run()
    {
        const std::size_t m = a_.rows();
        const std::size_t n = a_.cols();
        SmithForm out;
        for (std::size_t t = 0; t < std::min(m, n); ++t) {
            auto pivot = smallest_in_block(t);
            if (!pivot)
                break;
            swap_rows(t, pivot->first);
            swap_cols(t, pivot->second);
            while (true) {
                if (!clear_cross(t))
                    continue;
                auto bad = non_divisible(t);
                if (!bad)
                    break;
                add_row(t, *bad, 1);  // row t += row bad
            }
            if (a_.at(t, t) < 0)
                negate_row(t);
            out.factors.push_back(a_.at(t, t));
            ++out.rank;
        }
        return out;
    }

private:
    std::optional<std::pair<std::size_t, std::size_t>> smallest_in_block(std::size_t t) const
    {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        mpz_class best_abs;
        for (std::size_t i = t; i < a_.rows(); ++i)
            for (std::size_t j = t; j < a_.cols(); ++j) {
                const mpz_class& v = a_.at(i, j);
                if (v == 0)
                    continue;
                if (!best || mpz_cmpabs(v.get_mpz_t(), best_abs.get_mpz_t()) < 0) {
                    best = {i, j};
                    best_abs = abs(v);
                    if (best_abs == 1)
                        return best;
                }
            }
        return best;
    }

    // Reduces row t and column t against the pivot. Returns true when both
    // are clear; otherwise moves the smallest remainder into the pivot
    // position and returns false.
    bool clear_cross(std::size_t t)
    {
        const mpz_class p = a_.at(t, t);
        mpz_class q;
        for (std::size_t i = t + 1; i < a_.rows(); ++i) {
            if (a_.at(i, t) == 0)
                continue;
            mpz_fdiv_q(q.get_mpz_t(), a_.at(i, t).get_mpz_t(), p.get_mpz_t());
            add_row(i, t, -q);
        }
        for (std::size_t j = t + 1; j < a_.cols(); ++j) {
            if (a_.at(t, j) == 0)
                continue;
            mpz_fdiv_q(q.get_mpz_t(), a_.at(t, j).get_mpz_t(), p.get_mpz_t());
            add_col(j, t, -q);
        }
        std::optional<std::size_t> row, col;
        mpz_class best = abs(p);
        for (std::size_t i = t + 1; i < a_.rows(); ++i)
            if (a_.at(i, t) != 0 && mpz_cmpabs(a_.at(i, t).get_mpz_t(), best.get_mpz_t()) < 0) {
                best = abs(a_.at(i, t));
                row = i;
                col.reset();
            }
        for (std::size_t j = t + 1; j < a_.cols(); ++j)
            if (a_.at(t, j) != 0 && mpz_cmpabs(a_.at(t, j).get_mpz_t(), best.get_mpz_t()) < 0) {
                best = abs(a_.at(t, j));
                col = j;
                row.reset();
            }
        if (row) {
            swap_rows(t, *row);
            return false;
        }
        if (col) {
            swap_cols(t, *col);
            return false;
        }
        return true;
    }

    std::optional<std::size_t> non_divisible(std::size_t t) const
    {
        const mpz_class& p = a_.at(t, t);
        for (std::size_t i = t + 1; i < a_.rows(); ++i)
            for (std::size_t j = t + 1; j < a_.cols(); ++j)
                if (a_.at(i, j) != 0 && !mpz_divisible_p(a_.at(i, j).get_mpz_t(), p.get_mpz_t()))
                    return i;
        return std::nullopt;
    }

    // row dst += factor * row src
    void add_row(std::size_t dst, std::size_t src, const mpz_class& factor)
    {
        for (std::size_t j = 0; j < a_.cols(); ++j)
            if (a_.at(src, j) != 0)
                a_.at(dst, j) += factor * a_.at(src, j);
        if (left_)
            for (std::size_t j = 0; j < left_->cols(); ++j)
                if (left_->at(src, j) != 0)
                    left_->at(dst, j) += factor * left_->at(src, j);
    }

    // col dst += factor * col src
    void add_col(std::size_t dst, std::size_t src, const mpz_class& factor)
    {
        for (std::size_t i = 0; i < a_.rows(); ++i)
            if (a_.at(i, src) != 0)
                a_.at(i, dst) += factor * a_.at(i, src);
        if (right_)
            for (std::size_t i = 0; i < right_->rows(); ++i)
                if (right_->at(i, src) != 0)
                    right_->at(i, dst) += factor * right_->at(i, src);
    }

    void swap_rows(std::size_t x, std::size_t y)
    {
        if (x == y)
            return;
        for (std::size_t j = 0; j < a_.cols(); ++j)
            std::swap(a_.at(x, j), a_.at(y, j));
        if (left_)
            for (std::size_t j = 0; j < left_->cols(); ++j)
                std::swap(left_->at(x, j), left_->at(y, j));
    }

    void swap_cols(std::size_t x, std::size_t y)
    {
        if (x == y)
            return;
        for (std::size_t i = 0; i < a_.rows(); ++i)
            std::swap(a_.at(i, x), a_.at(i, y));
        if (right_)
            for (std::size_t i = 0; i < right_->rows(); ++i)
                std::swap(right_->at(i, x), right_->at(i, y));
    }

    void negate_row(std::size_t r)
    {
        for (std::size_t j = 0; j < a_.cols(); ++j)
            a_.at(r, j) = -a_.at(r, j);
        if (left_)
            for (std::size_t j = 0; j < left_->cols(); ++j)
                left_->at(r, j) = -left_->at(r, j);
    }

    IntegerMatrix& a_;
    IntegerMatrix* left_;
    IntegerMatrix* right_;
};

// The dense routine produces a diagonal whose entries already form a
// divisibility chain; sorting keeps the chain explicit for callers.
void sort_factors(SmithForm& f)
{
    std::sort(f.factors.begin(), f.factors.end());
}

} // namespace

SmithForm smith_normal_form(const IntegerMatrix& M)
{
    IntegerMatrix a = M;
    SmithForm f = DenseSmith(a, nullptr, nullptr).run();
    sort_factors(f);
    return f;
}

SmithDecomposition smith_decomposition(const IntegerMatrix& M)
{
    SmithDecomposition d;
    d.diagonal = M;
    d.left = IntegerMatrix::identity(M.rows());
    d.right = IntegerMatrix::identity(M.cols());
    d.form = DenseSmith(d.diagonal, &d.left, &d.right).run();
    return d;
}

namespace {

// Eliminates ±1 pivots column by column. Each pivot contributes an invariant
// factor 1 and removes its row and column; whatever is left is handed to the
// dense routine. Stops early (keeping a consistent state) if an update would
// overflow 64 bits.
SmithForm sparse_smith(const SparseIntegerMatrix& M)
{
    using Entry = SparseIntegerMatrix::Entry;
    using Column = SparseIntegerMatrix::Column;
    const std::size_t rows = M.rows();
    const std::size_t cols = M.cols();

    std::vector<Column> columns(cols);
    std::vector<std::vector<std::uint32_t>> row_cols(rows);
    for (std::size_t c = 0; c < cols; ++c) {
        columns[c] = M.column(c);
        for (auto [r, v] : columns[c])
            row_cols[r].push_back(static_cast<std::uint32_t>(c));
    }
    std::vector<bool> row_alive(rows, true), col_alive(cols, true);
    std::size_t unit_pivots = 0;
    bool overflowed = false;

    auto coefficient = [&](const Column& col, std::uint32_t r) -> std::int64_t {
        auto it = std::lower_bound(col.begin(), col.end(), r,
                                   [](const Entry& e, std::uint32_t key) { return e.first < key; });
        return (it != col.end() && it->first == r) ? it->second : 0;
    };

    // target - factor * source, or nullopt on overflow.
    auto combine = [](const Column& target, const Column& source,
                      std::int64_t factor) -> std::optional<Column> {
        Column out;
        out.reserve(target.size() + source.size());
        auto a = target.begin();
        auto b = source.begin();
        while (a != target.end() || b != source.end()) {
            if (b == source.end() || (a != target.end() && a->first < b->first)) {
                out.push_back(*a++);
                continue;
            }
            std::int64_t scaled = 0;
            if (__builtin_mul_overflow(b->second, factor, &scaled))
                return std::nullopt;
            if (scaled == INT64_MIN)
                return std::nullopt;
            std::int64_t value = -scaled;
            if (a != target.end() && a->first == b->first) {
                if (__builtin_add_overflow(a->second, value, &value))
                    return std::nullopt;
                ++a;
            }
            if (value != 0)
                out.emplace_back(b->first, value);
            ++b;
        }
        return out;
    };

    bool progress = true;
    while (progress && !overflowed) {
        progress = false;
        for (std::size_t c = 0; c < cols && !overflowed; ++c) {
            if (!col_alive[c] || columns[c].empty())
                continue;
            // Unit entry whose row meets the fewest columns.
            std::optional<Entry> pivot;
            std::size_t best = SIZE_MAX;
            for (const auto& e : columns[c]) {
                if ((e.second == 1 || e.second == -1) && row_cols[e.first].size() < best) {
                    best = row_cols[e.first].size();
                    pivot = e;
                }
            }
            if (!pivot)
                continue;
            const auto [r, u] = *pivot;
            // Clear row r from every other live column (column operations).
            std::vector<std::uint32_t> others;
            others.swap(row_cols[r]);
            std::vector<std::uint32_t> pending;
            for (std::uint32_t c2 : others) {
                if (c2 == c || !col_alive[c2])
                    continue;
                std::int64_t a = coefficient(columns[c2], r);
                if (a == 0)
                    continue;
                // u = ±1, so a / u = a * u.
                auto updated = combine(columns[c2], columns[c], a * u);
                if (!updated) {
                    overflowed = true;
                    pending.push_back(c2);
                    continue;
                }
                for (const auto& e : *updated)
                    if (coefficient(columns[c2], e.first) == 0)
                        row_cols[e.first].push_back(c2);
                columns[c2] = std::move(*updated);
            }
            if (overflowed) {
                // Leave this pivot unapplied; the dense phase sees the row as is.
                row_cols[r] = others;
                break;
            }
            row_alive[r] = false;
            col_alive[c] = false;
            columns[c].clear();
            ++unit_pivots;
            progress = true;
        }
    }

    // Dense remainder over live rows and columns that still have entries.
    std::vector<std::size_t> live_cols;
    for (std::size_t c = 0; c < cols; ++c) {
        if (!col_alive[c])
            continue;
        bool any = false;
        for (auto [r, v] : columns[c])
            any = any || row_alive[r];
        if (any)
            live_cols.push_back(c);
    }
    std::vector<std::int64_t> row_index(rows, -1);
    std::size_t live_rows = 0;
    for (std::size_t c : live_cols)
        for (auto [r, v] : columns[c])
            if (row_alive[r] && row_index[r] < 0)
                row_index[r] = static_cast<std::int64_t>(live_rows++);

    SmithForm out;
    out.factors.assign(unit_pivots, mpz_class(1));
    out.rank = unit_pivots;
    if (!live_cols.empty()) {
        IntegerMatrix rest(live_rows, live_cols.size());
        for (std::size_t j = 0; j < live_cols.size(); ++j)
            for (auto [r, v] : columns[live_cols[j]])
                if (row_alive[r])
                    rest.at(static_cast<std::size_t>(row_index[r]), j) = static_cast<long>(v);
        SmithForm tail = smith_normal_form(rest);
        out.rank += tail.rank;
        out.factors.insert(out.factors.end(), tail.factors.begin(), tail.factors.end());
    }
    sort_factors(out);
    return out;
}

} // namespace

SmithForm smith_normal_form(const SparseIntegerMatrix& M)
{
    return sparse_smith(M);
}

SparseIntegerMatrix sparse_boundary_matrix(const std::vector<std::vector<Mask>>& levels, int d)
{
    if (d < 0)
        throw InputError("boundary degree must be >= 0");
    const auto col_level = static_cast<std::size_t>(d + 1);
    const auto row_level = static_cast<std::size_t>(d);
    const std::size_t rows = row_level < levels.size() ? levels[row_level].size() : 0;
    const std::size_t cols = col_level < levels.size() ? levels[col_level].size() : 0;
    SparseIntegerMatrix B(rows, cols);
    if (cols == 0 || rows == 0)
        return B;
    std::unordered_map<Mask, std::uint32_t> row_of;
    row_of.reserve(rows * 2);
    for (std::size_t i = 0; i < rows; ++i)
        row_of.emplace(levels[row_level][i], static_cast<std::uint32_t>(i));
    for (std::size_t c = 0; c < cols; ++c) {
        Mask face = levels[col_level][c];
        Mask rest = face;
        std::int64_t sign = 1;
        while (rest != 0) {
            Mask bit = rest & (~rest + 1);
            B.add(row_of.at(face & ~bit), c, sign);
            sign = -sign;
            rest &= rest - 1;
        }
    }
    return B;
}

IntegerMatrix boundary_matrix(const SimplicialComplex& K, int d)
{
    if (K.is_void())
        throw InputError("boundary of the void complex");
    return sparse_boundary_matrix(faces_by_dimension(K), d).to_dense();
}

std::vector<HomologyGroup> reduced_homology(const SimplicialComplex& K)
{
    if (K.is_void())
        throw InputError("homology of the void complex");
    const auto levels = faces_by_dimension(K);
    const int top = static_cast<int>(levels.size()) - 2;  // dim K

    // forms[d] is the Smith form of ∂_d for d = 0 .. top; ∂_{top+1} = 0.
    std::vector<SmithForm> forms;
    for (int d = 0; d <= top; ++d)
        forms.push_back(smith_normal_form(sparse_boundary_matrix(levels, d)));
    auto rank = [&](int d) -> std::size_t {
        return (d >= 0 && d <= top) ? forms[static_cast<std::size_t>(d)].rank : 0;
    };

    std::vector<HomologyGroup> out;
    for (int d = -1; d <= top; ++d) {
        HomologyGroup g;
        g.degree = d;
        const std::size_t faces_d = levels[static_cast<std::size_t>(d + 1)].size();
        g.betti = faces_d - rank(d) - rank(d + 1);
        if (d + 1 <= top)
            for (const auto& f : forms[static_cast<std::size_t>(d + 1)].factors)
                if (f > 1)
                    g.torsion.push_back(f);
        out.push_back(std::move(g));
    }
    return out;
}

bool matches_sphere(const std::vector<HomologyGroup>& h, int d)
{
    bool found = false;
    for (const auto& g : h) {
        if (!g.torsion.empty())
            return false;
        if (g.degree == d) {
            if (g.betti != 1)
                return false;
            found = true;
        } else if (g.betti != 0) {
            return false;
        }
    }
    return found;
}

bool matches_sphere(const SimplicialComplex& K, int d)
{
    return matches_sphere(reduced_homology(K), d);
}

bool matches_point(const std::vector<HomologyGroup>& h)
{
    return std::all_of(h.begin(), h.end(), [](const HomologyGroup& g) { return g.trivial(); });
}

bool matches_point(const SimplicialComplex& K)
{
    return matches_point(reduced_homology(K));
}

bool same_homology(const std::vector<HomologyGroup>& a, const std::vector<HomologyGroup>& b)
{
    auto nontrivial = [](const std::vector<HomologyGroup>& h) {
        std::vector<std::tuple<int, std::size_t, std::vector<mpz_class>>> out;
        for (const auto& g : h)
            if (!g.trivial())
                out.emplace_back(g.degree, g.betti, g.torsion);
        return out;
    };
    return nontrivial(a) == nontrivial(b);
}

std::string homology_json(const std::vector<HomologyGroup>& h)
{
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& g : h) {
        if (g.trivial())
            continue;
        nlohmann::ordered_json torsion = nlohmann::ordered_json::array();
        for (const auto& t : g.torsion) {
            if (t.fits_slong_p())
                torsion.push_back(t.get_si());
            else
                torsion.push_back(t.get_str());
        }
        j[std::to_string(g.degree)] = {{"betti", g.betti}, {"torsion", torsion}};
    }
    return j.dump();
}

std::string homology_summary(const std::vector<HomologyGroup>& h)
{
    std::ostringstream out;
    bool first = true;
    for (const auto& g : h) {
        if (g.trivial())
            continue;
        out << (first ? "" : ", ") << "H~_" << g.degree << " = ";
        bool term = false;
        if (g.betti > 0) {
            out << "Z";
            if (g.betti > 1)
                out << '^' << g.betti;
            term = true;
        }
        for (const auto& t : g.torsion) {
            out << (term ? " + " : "") << "Z/" << t.get_str();
            term = true;
        }
        first = false;
    }
    return first ? "0" : out.str();
}

} // namespace chainmail
