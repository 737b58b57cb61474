#include "ogr/schubert.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <unordered_map>

#include "ogr/error.hpp"

namespace ogr {

using f2::Polynomial;

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw InvalidArgument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw InvalidArgument("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

Partition Partition::hook(int first_row, int rows)
{
    if (first_row < 1 || rows < 1)
        throw InvalidArgument("hook needs a positive arm and leg");
    std::vector<int> parts(static_cast<std::size_t>(rows), 1);
    parts[0] = first_row;
    return Partition(std::move(parts));
}

Partition Partition::conjugate() const
{
    std::vector<int> c(static_cast<std::size_t>(part(1)), 0);
    for (int row : parts_)
        for (int j = 0; j < row; ++j)
            ++c[static_cast<std::size_t>(j)];
    return Partition(std::move(c));
}

bool Partition::in_box(int rows, int cols) const { return length() <= rows && part(1) <= cols; }

std::vector<std::vector<int>> Partition::hook_lengths() const
{
    Partition c = conjugate();
    std::vector<std::vector<int>> h(parts_.size());
    for (int i = 1; i <= length(); ++i)
        for (int j = 1; j <= part(i); ++j)
            h[static_cast<std::size_t>(i - 1)].push_back(part(i) - j + c.part(j) - i + 1);
    return h;
}

int Partition::count_hooks(int p) const
{
    int c = 0;
    for (const auto& row : hook_lengths())
        c += static_cast<int>(std::count(row.begin(), row.end(), p));
    return c;
}

std::vector<int> Partition::beta_numbers() const
{
    std::vector<int> beta;
    int L = length();
    for (int i = 1; i <= L; ++i)
        beta.push_back(part(i) + L - i);
    return beta;
}

Partition Partition::from_beta_numbers(std::vector<int> beta)
{
    std::sort(beta.begin(), beta.end(), std::greater<>());
    int L = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 1; i <= L; ++i)
        parts.push_back(beta[static_cast<std::size_t>(i - 1)] - (L - i));
    return Partition(std::move(parts));
}

std::string Partition::to_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

namespace {

void box_rec(int remaining, int max_part, int rows_left, std::vector<int>& cur, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (rows_left == 0)
        return;
    // Prune when even full rows cannot absorb the rest.
    if (static_cast<long>(max_part) * rows_left < remaining)
        return;
    for (int p = std::min(max_part, remaining); p >= 1; --p) {
        cur.push_back(p);
        box_rec(remaining - p, p, rows_left - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_in_box(int rows, int cols, int d)
{
    std::vector<Partition> out;
    if (d < 0 || rows < 0 || cols < 0)
        return out;
    std::vector<int> cur;
    box_rec(d, cols, rows, cur, out);
    return out;
}

std::vector<Partition> partitions_of(int d) { return partitions_in_box(d, d, d); }

int nu2_factorial(int n)
{
    int v = 0;
    for (int p = 2; p <= n; p *= 2)
        v += n / p;
    return v;
}

bool syt_parity(const Partition& lambda)
{
    int v = 0;
    for (const auto& row : lambda.hook_lengths())
        for (int h : row)
            v += std::countr_zero(static_cast<unsigned>(h));
    return nu2_factorial(lambda.size()) == v;
}

std::vector<Partition> rim_hook_removal(const Partition& lambda, int p)
{
    if (p < 1)
        throw InvalidArgument("rim hook length must be positive");
    std::vector<int> beta = lambda.beta_numbers();
    std::set<int> occupied(beta.begin(), beta.end());
    std::vector<Partition> out;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        int target = beta[i] - p;
        if (target < 0 || occupied.count(target))
            continue;
        std::vector<int> moved = beta;
        moved[i] = target;
        out.push_back(Partition::from_beta_numbers(std::move(moved)));
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

Partition core(const Partition& lambda, int p)
{
    Partition cur = lambda;
    while (true) {
        auto next = rim_hook_removal(cur, p);
        if (next.empty())
            return cur;
        cur = next.front();
    }
}

bool syt_parity_via_cores(const Partition& lambda)
{
    int n = lambda.size();
    if (n <= 1)
        return true;
    int power = 1;
    while (power * 2 <= n)
        power *= 2;
    auto removed = rim_hook_removal(lambda, power);
    if (removed.size() != 1)
        return false;
    return syt_parity_via_cores(removed.front());
}

std::vector<Partition> w1_power_support(int k, int n, int p)
{
    if (k < 1 || k > n)
        throw InvalidArgument("need 1 <= k <= n");
    std::vector<Partition> out;
    for (auto& lambda : partitions_in_box(k, n - k, p))
        if (syt_parity(lambda))
            out.push_back(std::move(lambda));
    return out;
}

int height_w1_oracle(int k, int n)
{
    if (k < 1 || k > n)
        throw InvalidArgument("need 1 <= k <= n");
    int top = k * (n - k);
    for (int p = top; p >= 0; --p)
        if (!w1_power_support(k, n, p).empty())
            return p;
    return 0;
}

Polynomial schubert_to_monomials(const Partition& lambda, int k)
{
    Partition c = lambda.conjugate();
    if (c.part(1) > k)
        throw InvalidArgument("partition " + lambda.to_string() + " has a column longer than k = " +
                              std::to_string(k));
    int r = c.length();
    if (r == 0)
        return Polynomial::one(k);
    if (r > 30)
        throw InvalidArgument("partition too wide for the determinant expansion");
    // Over F2 the determinant equals the permanent; expand row by row with the
    // set of used columns as memo key.
    auto entry = [&](int i, int j) { return Polynomial::w(k, c.part(i + 1) - (i + 1) + (j + 1)); };
    std::unordered_map<std::uint32_t, Polynomial> memo;
    std::function<Polynomial(std::uint32_t)> expand = [&](std::uint32_t used) -> Polynomial {
        int row = std::popcount(used);
        if (row == r)
            return Polynomial::one(k);
        if (auto it = memo.find(used); it != memo.end())
            return it->second;
        Polynomial acc(k, f2::Flavor::W1);
        for (int col = 0; col < r; ++col) {
            if (used & (1U << col))
                continue;
            Polynomial e = entry(row, col);
            if (e.is_zero())
                continue;
            acc += e * expand(used | (1U << col));
        }
        memo.emplace(used, acc);
        return acc;
    };
    return expand(0);
}

}  // namespace ogr
