#include "ratiospace/topology.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

namespace ratiospace {

SimplicialComplex::SimplicialComplex(std::vector<std::string> labels, std::vector<Simplex> facets)
    : labels_(std::move(labels))
{
    for (auto& f : facets)
    {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        for (auto v : f)
            if (v >= labels_.size())
                throw Error(ErrorCode::InvalidInput, "simplex refers to an unknown vertex");
    }
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    for (std::size_t i = 0; i < facets.size(); ++i)
    {
        bool maximal = !facets[i].empty();
        for (std::size_t j = 0; j < facets.size() && maximal; ++j)
            if (i != j && facets[j].size() > facets[i].size()
                && std::includes(facets[j].begin(), facets[j].end(), facets[i].begin(), facets[i].end()))
                maximal = false;
        if (maximal)
            facets_.push_back(facets[i]);
    }
    // Isolated vertices that appear in no listed simplex are still vertices.
    std::vector<bool> covered(labels_.size(), false);
    for (const auto& f : facets_)
        for (auto v : f)
            covered[v] = true;
    for (std::size_t v = 0; v < labels_.size(); ++v)
        if (!covered[v])
            facets_.push_back({v});
    std::sort(facets_.begin(), facets_.end());
}

SimplicialComplex SimplicialComplex::full_simplex(std::vector<std::string> labels)
{
    Simplex all(labels.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    return SimplicialComplex(std::move(labels), {all});
}

SimplicialComplex SimplicialComplex::point()
{
    return SimplicialComplex({"p"}, {{0}});
}

SimplicialComplex SimplicialComplex::path(std::size_t edges)
{
    std::vector<std::string> labels;
    for (std::size_t v = 0; v <= edges; ++v)
        labels.push_back("v" + std::to_string(v));
    std::vector<Simplex> facets;
    for (std::size_t e = 0; e < edges; ++e)
        facets.push_back({e, e + 1});
    if (edges == 0)
        facets.push_back({0});
    return SimplicialComplex(std::move(labels), std::move(facets));
}

int SimplicialComplex::dimension() const
{
    int dim = -1;
    for (const auto& f : facets_)
        dim = std::max(dim, static_cast<int>(f.size()) - 1);
    return dim;
}

bool SimplicialComplex::contains(const Simplex& s) const
{
    Simplex sorted(s);
    std::sort(sorted.begin(), sorted.end());
    return std::any_of(facets_.begin(), facets_.end(), [&](const Simplex& f) {
        return std::includes(f.begin(), f.end(), sorted.begin(), sorted.end());
    });
}

bool SimplicialComplex::is_full_simplex() const
{
    return facets_.size() == 1 && facets_.front().size() == labels_.size();
}

std::vector<SimplicialComplex::Simplex> SimplicialComplex::simplices(std::size_t k) const
{
    std::set<Simplex> out;
    const std::size_t size = k + 1;
    for (const auto& f : facets_)
    {
        if (f.size() < size)
            continue;
        std::vector<std::size_t> idx(size);
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        while (true)
        {
            Simplex s(size);
            for (std::size_t i = 0; i < size; ++i)
                s[i] = f[idx[i]];
            out.insert(std::move(s));
            std::size_t i = size;
            while (i > 0 && idx[i - 1] == f.size() - size + i - 1)
                --i;
            if (i == 0)
                break;
            ++idx[i - 1];
            for (std::size_t j = i; j < size; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }
    return std::vector<Simplex>(out.begin(), out.end());
}

std::size_t SimplicialComplex::count(std::size_t k) const
{
    return simplices(k).size();
}

std::optional<std::size_t> SimplicialComplex::cone_apex() const
{
    if (facets_.empty())
        return std::nullopt;
    Simplex common = facets_.front();
    for (const auto& f : facets_)
    {
        Simplex meet;
        std::set_intersection(common.begin(), common.end(), f.begin(), f.end(), std::back_inserter(meet));
        common = std::move(meet);
    }
    if (common.empty())
        return std::nullopt;
    return common.front();
}

std::string SimplicialComplex::to_dot(const std::string& name) const
{
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (std::size_t v = 0; v < labels_.size(); ++v)
        out << "  v" << v << " [label=\"" << labels_[v] << "\"];\n";
    for (const auto& e : simplices(1))
        out << "  v" << e[0] << " -- v" << e[1] << ";\n";
    out << "}\n";
    return out.str();
}

std::size_t HomologyReport::reduced_betti(std::size_t k) const
{
    if (k == 0)
        return betti.empty() || betti[0] == 0 ? 0 : betti[0] - 1;
    return betti.at(k);
}

bool HomologyReport::acyclic() const
{
    if (betti.empty() || betti[0] != 1)
        return false;
    for (std::size_t k = 1; k < betti.size(); ++k)
        if (betti[k] != 0)
            return false;
    return std::all_of(torsion.begin(), torsion.end(), [](const auto& t) { return t.empty(); });
}

namespace {

using Index = std::uint32_t;

template <typename T>
using SparseColumn = std::vector<std::pair<Index, T> >;

bool checked_mul(long long a, long long b, long long& out) { return !__builtin_mul_overflow(a, b, &out); }
bool checked_sub(long long a, long long b, long long& out) { return !__builtin_sub_overflow(a, b, &out); }
bool checked_mul(const Integer& a, const Integer& b, Integer& out) { out = a * b; return true; }
bool checked_sub(const Integer& a, const Integer& b, Integer& out) { out = a - b; return true; }

/** v - c w for sparse columns sorted by row; false on overflow. */
template <typename T>
bool axpy(SparseColumn<T>& v, const T& c, const SparseColumn<T>& w)
{
    SparseColumn<T> out;
    out.reserve(v.size() + w.size());
    std::size_t i = 0, j = 0;
    while (i < v.size() || j < w.size())
    {
        if (j == w.size() || (i < v.size() && v[i].first < w[j].first))
            out.push_back(v[i++]);
        else
        {
            T prod;
            if (!checked_mul(c, w[j].second, prod))
                return false;
            T val = T(0);
            if (i < v.size() && v[i].first == w[j].first)
            {
                if (!checked_sub(v[i].second, prod, val))
                    return false;
                ++i;
            }
            else if (!checked_sub(T(0), prod, val))
                return false;
            if (val != 0)
                out.emplace_back(w[j].first, val);
            ++j;
        }
    }
    v = std::move(out);
    return true;
}

/**
 * Column reduction by unit pivots at the lowest nonzero row. Adding integer
 * multiples of earlier columns is unimodular, and a reduced matrix whose
 * nonzero columns have distinct unit low entries has all invariant factors 1.
 * Returns nullopt when a non-unit low entry or an overflow blocks this route.
 */
template <typename T>
std::optional<std::size_t> unit_pivot_rank(std::vector<SparseColumn<T> > columns, std::size_t rows)
{
    std::vector<std::size_t> pivot_col(rows, std::numeric_limits<std::size_t>::max());
    std::size_t rank = 0;
    for (std::size_t j = 0; j < columns.size(); ++j)
    {
        auto& v = columns[j];
        while (!v.empty())
        {
            const auto [low, a] = v.back();
            const std::size_t p = pivot_col[low];
            if (p == std::numeric_limits<std::size_t>::max())
            {
                if (a != 1 && a != -1)
                    return std::nullopt;
                pivot_col[low] = j;
                ++rank;
                break;
            }
            const auto& w = columns[p];
            T c;
            if (!checked_mul(a, w.back().second, c))    // w's low entry is ±1
                return std::nullopt;
            if (!axpy(v, c, w))
                return std::nullopt;
        }
    }
    return rank;
}

std::size_t binomial_capped(std::size_t n, std::size_t k, std::size_t cap)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    long double acc = 1;
    for (std::size_t i = 1; i <= k; ++i)
    {
        acc = acc * static_cast<long double>(n - k + i) / static_cast<long double>(i);
        if (acc > static_cast<long double>(cap))
            return cap + 1;
    }
    return static_cast<std::size_t>(acc + 0.5L);
}

}   // anonymous namespace

IntMatrix boundary_matrix(const SimplicialComplex& K, std::size_t k)
{
    if (k == 0)
        return IntMatrix(0, K.count(0));
    const auto rows = K.simplices(k - 1);
    const auto cols = K.simplices(k);
    IntMatrix m(rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t drop = 0; drop <= k; ++drop)
        {
            SimplicialComplex::Simplex face;
            for (std::size_t v = 0; v <= k; ++v)
                if (v != drop)
                    face.push_back(cols[j][v]);
            const auto it = std::lower_bound(rows.begin(), rows.end(), face);
            m(static_cast<std::size_t>(it - rows.begin()), j) = (drop % 2 == 0) ? 1 : -1;
        }
    return m;
}

BoundaryInvariants boundary_invariants(const SimplicialComplex& K, std::size_t k)
{
    BoundaryInvariants out;
    if (k == 0)
        return out;
    const auto rows = K.simplices(k - 1);
    const auto cols = K.simplices(k);
    if (rows.empty() || cols.empty())
        return out;

    // Reduce along the smaller side; rank and invariant factors are transpose invariant.
    const bool transpose = cols.size() > rows.size();
    std::vector<SparseColumn<long long> > columns(transpose ? rows.size() : cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t drop = 0; drop <= k; ++drop)
        {
            SimplicialComplex::Simplex face;
            for (std::size_t v = 0; v <= k; ++v)
                if (v != drop)
                    face.push_back(cols[j][v]);
            const auto r = static_cast<Index>(std::lower_bound(rows.begin(), rows.end(), face) - rows.begin());
            const long long sign = (drop % 2 == 0) ? 1 : -1;
            if (transpose)
                columns[r].emplace_back(static_cast<Index>(j), sign);
            else
                columns[j].emplace_back(r, sign);
        }
    for (auto& c : columns)
        std::sort(c.begin(), c.end());
    const std::size_t nrows = transpose ? cols.size() : rows.size();

    if (auto r = unit_pivot_rank(columns, nrows))
    {
        out.rank = *r;
        return out;
    }
    std::vector<SparseColumn<Integer> > big(columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (const auto& [row, val] : columns[j])
            big[j].emplace_back(row, Integer(val));
    if (auto r = unit_pivot_rank(big, nrows))
    {
        out.rank = *r;
        return out;
    }

    for (const auto& f : invariant_factors(boundary_matrix(K, k)))
    {
        ++out.rank;
        if (f != 1)
            out.nonunit_factors.push_back(f);
    }
    return out;
}

HomologyReport homology(const SimplicialComplex& K, std::size_t max_degree)
{
    HomologyReport report;
    report.max_degree = max_degree;
    std::vector<std::size_t> ranks(max_degree + 2, 0);
    std::vector<std::vector<Integer> > factors(max_degree + 2);
    for (std::size_t k = 1; k <= max_degree + 1; ++k)
    {
        const auto inv = boundary_invariants(K, k);
        ranks[k] = inv.rank;
        factors[k] = inv.nonunit_factors;
    }
    for (std::size_t k = 0; k <= max_degree; ++k)
    {
        const std::size_t n = K.count(k);
        report.betti.push_back(n - ranks[k] - ranks[k + 1]);
        report.torsion.push_back(factors[k + 1]);
    }
    return report;
}

std::size_t homology_degree_within_budget(const SimplicialComplex& K, std::size_t budget)
{
    const int dim = K.dimension();
    if (dim <= 0)
        return 0;
    auto level_bound = [&](std::size_t j) {
        std::size_t total = 0;
        for (const auto& f : K.facets())
            total += binomial_capped(f.size(), j + 1, budget);
        return total;
    };
    std::size_t used = level_bound(0) + level_bound(1);
    std::size_t degree = 0;
    while (static_cast<int>(degree) < dim)
    {
        const std::size_t next = level_bound(degree + 2);
        if (used + next > budget)
            break;
        used += next;
        ++degree;
    }
    return degree;
}

}   // namespace ratiospace
