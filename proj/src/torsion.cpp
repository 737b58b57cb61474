#include "ogr/torsion.hpp"

#include "ogr/error.hpp"

namespace ogr {

using f2::BitMatrix;
using f2::BitVector;
using f2::Monomial;
using f2::Polynomial;
using f2::RowReducer;

namespace {

std::size_t row_rank(const BitMatrix& m) { return f2::rank(m); }

BitMatrix stack(const BitMatrix& a, const BitMatrix& b)
{
    BitMatrix s(0, a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        s.append_row(a.row(r));
    for (std::size_t r = 0; r < b.rows(); ++r)
        s.append_row(b.row(r));
    return s;
}

// w_1 applied to ker(op)_{d-1}, as vectors in H^d.
std::vector<BitVector> a_space(const OperatorTower& tower, OpKind op, int d)
{
    BitMatrix w1 = tower.map(OpKind::MultW1, d - 1);
    std::vector<BitVector> out;
    for (const auto& v : f2::left_kernel(tower.map(op, d - 1)))
        out.push_back(f2::row_combination(v, w1));
    return out;
}

std::size_t span_rank(const std::vector<BitVector>& vs, std::size_t width)
{
    RowReducer red(width);
    for (const auto& v : vs)
        red.insert(v);
    return red.rank();
}

void check_inclusion(const std::vector<BitVector>& a, const BitMatrix& image, std::size_t width, int d,
                     const char* label)
{
    RowReducer red(width);
    for (std::size_t r = 0; r < image.rows(); ++r)
        red.insert(image.row(r));
    for (const auto& v : a)
        if (!red.contains(v))
            throw InvariantViolation(std::string("inclusion ") + label + " fails in degree " + std::to_string(d));
}

}  // namespace

TorsionReport torsion4_scan(const OperatorTower& tower, int max_degree)
{
    TorsionReport rep;
    rep.k = tower.k;
    rep.n = tower.n;
    rep.top = tower.top;
    rep.max_degree = max_degree < 0 ? tower.top : std::min(max_degree, tower.top);
    for (int d = 0; d <= rep.max_degree; ++d) {
        TorsionDegree td;
        td.degree = d;
        td.dim = tower.dim(d);
        if (d > 0 && td.dim > 0) {
            BitMatrix w1 = tower.map(OpKind::MultW1, d - 1);
            BitMatrix sq = tower.map(OpKind::Sq1, d - 1);
            BitMatrix sqL = tower.map(OpKind::Sq1L, d - 1);
            std::size_t rw = row_rank(w1);
            std::size_t rs = row_rank(sq);
            std::size_t rl = row_rank(sqL);
            auto A2 = a_space(tower, OpKind::Sq1, d);
            auto A3 = a_space(tower, OpKind::Sq1L, d);
            // A2 ⊆ Im w_1 by construction; it must also sit inside Im Sq^1_L.
            check_inclusion(A2, sqL, td.dim, d, "w1 ker Sq1 in Im Sq1L");
            check_inclusion(A3, sq, td.dim, d, "w1 ker Sq1L in Im Sq1");
            td.a2 = span_rank(A2, td.dim);
            td.a3 = span_rank(A3, td.dim);
            td.b2 = rw + rl - row_rank(stack(w1, sqL));
            td.b3 = rw + rs - row_rank(stack(w1, sq));
            if (td.a2 > td.b2 || td.a3 > td.b3)
                throw InvariantViolation("dim A exceeds dim B in degree " + std::to_string(d));
        }
        for (std::size_t i = 0; i < td.multiplicity2(); ++i)
            rep.degrees2.push_back(d);
        for (std::size_t i = 0; i < td.multiplicity3(); ++i)
            rep.degrees3.push_back(d);
        rep.per_degree.push_back(td);
    }
    return rep;
}

RingView make_view(const SchubertRing& ring, int threads)
{
    RingView v;
    v.k = ring.k();
    v.n = ring.n();
    v.basis = "schubert";
    v.tower = build_tower(ring, threads);
    v.reduce = [&ring](const Polynomial& p, int d) { return ring.reduce(p, d); };
    return v;
}

RingView make_view(const QuotientRing& ring, int threads)
{
    RingView v;
    v.k = ring.k();
    v.n = ring.n();
    v.basis = "monomial";
    v.tower = build_tower(ring, threads);
    v.reduce = [&ring](const Polynomial& p, int d) { return ring.reduce(p, d); };
    return v;
}

int two_power_exponent(int n)
{
    if (n < 2)
        throw InvalidArgument("n must be at least 2");
    int t = 0;
    while ((1 << t) < n)
        ++t;
    return t;
}

Polynomial d_n(int k, int n)
{
    int t = two_power_exponent(n);
    return Polynomial::w(k, 1).pow((1 << t) - 1);
}

Polynomial a_n(int k, int n)
{
    int t = two_power_exponent(n);
    int half = 1 << (t - 1);
    Monomial m = Monomial::generator(k, 1, half - 1) * Monomial::generator(k, k, n - half);
    return Polynomial::monomial(m);
}

Witness witness_class(const RingView& view, int d, int condition)
{
    if (condition != 2 && condition != 3)
        throw InvalidArgument("condition must be 2 or 3");
    const auto& tower = view.tower;
    if (d < 1 || d > tower.top)
        throw InvalidArgument("degree outside the ring");
    OpKind op_a = condition == 2 ? OpKind::Sq1 : OpKind::Sq1L;
    OpKind op_b = condition == 2 ? OpKind::Sq1L : OpKind::Sq1;
    std::size_t width = tower.dim(d);
    BitMatrix w1 = tower.map(OpKind::MultW1, d - 1);
    BitMatrix ob = tower.map(op_b, d - 1);

    RowReducer a_span(width);
    for (const auto& v : a_space(tower, op_a, d))
        a_span.insert(v);

    // Intersection Im w_1 cap Im op_b: x w1 = y ob for (x, y) in the left kernel
    // of the stacked matrix.
    BitMatrix st = stack(w1, ob);
    std::vector<BitVector> candidates;
    std::vector<std::pair<BitVector, BitVector>> solves;
    for (const auto& combo : f2::left_kernel(st)) {
        BitVector x(w1.rows()), y(ob.rows());
        for (std::size_t i : combo.ones()) {
            if (i < w1.rows())
                x.set(i);
            else
                y.set(i - w1.rows());
        }
        BitVector z = f2::row_combination(x, w1);
        if (z.none())
            continue;
        candidates.push_back(z);
        solves.emplace_back(x, y);
    }

    auto solve_for = [&](const BitVector& z) -> std::optional<std::pair<BitVector, BitVector>> {
        BitVector cx(w1.rows()), cy(ob.rows());
        RowReducer rw(width), ro(width);
        for (std::size_t r = 0; r < w1.rows(); ++r)
            rw.insert_tracked(w1.row(r), BitVector::unit(w1.rows(), r));
        for (std::size_t r = 0; r < ob.rows(); ++r)
            ro.insert_tracked(ob.row(r), BitVector::unit(ob.rows(), r));
        if (rw.reduce_tracked(z, cx).any() || ro.reduce_tracked(z, cy).any())
            return std::nullopt;
        return std::make_pair(cx, cy);
    };

    Witness w;
    w.condition = condition;
    w.degree = d;
    // Prefer the named classes.
    for (const auto& [name, poly] :
         {std::pair<std::string, Polynomial>{"d_n", d_n(view.k, view.n)}, {"a_n", a_n(view.k, view.n)}}) {
        if (poly.degree() != d)
            continue;
        CohomologyClass z = view.reduce(poly, d);
        if (z.is_zero() || a_span.contains(z.coords))
            continue;
        if (auto s = solve_for(z.coords)) {
            w.z = z;
            w.name = name;
            w.z_prime = {d - 1, s->first};
            w.a = {d - 1, s->second};
            return w;
        }
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (a_span.contains(candidates[i]))
            continue;
        w.z = {d, candidates[i]};
        w.z_prime = {d - 1, solves[i].first};
        w.a = {d - 1, solves[i].second};
        return w;
    }
    throw InvalidArgument("no 4-torsion witness in degree " + std::to_string(d) + " (multiplicity 0)");
}

std::vector<std::size_t> anomalous_degrees(const OperatorTower& tower, int max_degree)
{
    int last = max_degree < 0 ? tower.top : std::min(max_degree, tower.top);
    std::vector<std::size_t> out;
    for (int d = 0; d <= last; ++d)
        out.push_back(f2::left_kernel(tower.map(OpKind::MultW1, d)).size());
    return out;
}

UpperBoundCheck upper_bound_check(const RingView& view)
{
    int k = view.k, n = view.n;
    UpperBoundCheck c;
    c.t = two_power_exponent(n);
    int half = 1 << (c.t - 1);
    if (k < 5 || k > half || n <= half)
        throw InvalidArgument("upper_bound_check needs 5 <= k <= 2^(t-1) < n <= 2^t");
    auto check = [&](const Polynomial& p, int& degree, bool& nonzero, bool& in_kernel) {
        degree = p.degree();
        if (degree > view.tower.top) {
            in_kernel = true;  // the zero class
            return;
        }
        CohomologyClass x = view.reduce(p, degree);
        nonzero = !x.is_zero();
        BitVector image = f2::row_combination(x.coords, view.tower.map(OpKind::MultW1, degree));
        in_kernel = image.none();
    };
    check(d_n(k, n), c.degree_d, c.d_nonzero, c.d_in_kernel);
    check(a_n(k, n), c.degree_a, c.a_nonzero, c.a_in_kernel);
    return c;
}

}  // namespace ogr
