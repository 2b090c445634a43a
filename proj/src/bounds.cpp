#include "kawa/bounds.hpp"

#include <cmath>

#include "kawa/approx.hpp"
#include "kawa/errors.hpp"

namespace kawa
{

namespace
{

void check_border(const LinearSystem& s)
{
    if (!s.bordered)
        return;
    if (s.row.max_index() > s.N || s.col.max_index() > s.N)
        throw DomainMismatch("border vectors must live inside the N window");
    if (s.row.parity() != s.parity || s.col.parity() != s.parity)
        throw DomainMismatch("border vectors have the wrong parity");
}

// Interval matrix of the bordered system: rows cover the border and the N
// window, columns the border and indices up to max_col.
IMatrix system_rows(const LinearSystem& s, int max_col, const std::vector<Interval>& lv)
{
    const int f = first_index(s.parity);
    const int b = s.border();
    const int n = s.N + 1 - f;
    const int nc = max_col + 1 - f;
    IMatrix m(b + n, b + nc);
    const IMatrix mv = mult_matrix(s.v, s.parity, s.N, max_col);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < nc; ++k)
            m(b + i, b + k) = mv(i, k) / lv[k + f];
    for (int i = 0; i < n; ++i)
        m(b + i, b + i) += Interval(1.0);
    if (s.bordered) {
        m(0, 0) = s.corner;
        for (int k = 0; k < n; ++k) {
            m(0, b + k) = s.row.at(k + f) * Interval(fold_weight(k + f));
            m(b + k, 0) = s.col.at(k + f);
        }
    }
    return m;
}

} // namespace

IMatrix to_orthonormal(const IMatrix& m, Parity parity, int border, int row_first, int col_first)
{
    const int f = first_index(parity);
    if (row_first < 0)
        row_first = f;
    if (col_first < 0)
        col_first = f;
    const Interval sqrt2 = sqrt(Interval(2.0));
    const Interval inv_sqrt2 = sqrt2 / Interval(2.0);
    auto unit_weight = [&](int i, int first) { return i < border || first + (i - border) == 0; };
    IMatrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        const bool ri = unit_weight(i, row_first);
        for (int j = 0; j < m.cols(); ++j) {
            const bool cj = unit_weight(j, col_first);
            if (ri == cj)
                out(i, j) = m(i, j);
            else if (ri)
                out(i, j) = m(i, j) * inv_sqrt2;
            else
                out(i, j) = m(i, j) * sqrt2;
        }
    }
    return out;
}

Eigen::MatrixXd float_system(const LinearSystem& s)
{
    check_border(s);
    const auto lv = s.symbol.table(s.N, s.d);
    return system_rows(s, s.N, lv).mid();
}

Eigen::MatrixXd approximate_inverse(const LinearSystem& s)
{
    const Eigen::MatrixXd m = float_system(s);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
    if (!lu.isInvertible())
        throw SingularTruncation("truncated system is singular in floating point");
    return lu.inverse();
}

Interval cosh_inner(const ISeq& v, const Interval& a)
{
    if (v.parity() != Parity::even)
        throw DomainMismatch("cosh weight inner product needs an even multiplier");
    const int nv = v.max_index();
    const ISeq E = cosh_weight_series(a, v.d(), 2 * nv);
    std::vector<Interval> ve(static_cast<std::size_t>(nv) + 1);
#pragma omp parallel for schedule(static)
    for (int n = 0; n <= nv; ++n) {
        Interval acc = v[0] * E.at(n);
        for (int m = 1; m <= nv; ++m)
            acc += v[m] * (E.at(n - m) + E.at(n + m));
        ve[n] = acc;
    }
    const Interval r = inner(v, ISeq(v.d(), Parity::even, std::move(ve)));
    if (r.hi() < 0.0)
        throw NegativeInner("(v, v*E) is certified negative");
    return Interval::raw(std::max(r.lo(), 0.0), r.hi());
}

ZuParts zu_parts(const ISeq& v, const Symbol& l, double d)
{
    const KernelConstants k = kernel_constants(l);
    const Interval S = cosh_inner(v, k.a);
    const Interval dd(d);
    const Interval omega = Interval(2.0) * dd;
    const Interval c2 = sqr(k.C0);
    const Interval zu1_sq = omega * c2 * exp(Interval(-2.0) * k.a * dd) / k.a * S;
    const Interval zu2_sq = zu1_sq + exp(Interval(-4.0) * k.a * dd) * geometry_Cd(k.a, d) * c2 * omega * S;
    return {sqrt(zu1_sq), sqrt(zu2_sq)};
}

Interval norm_pib(const Eigen::MatrixXd& pib, Parity parity, int border)
{
    const double n = op_norm2_upper(to_orthonormal(IMatrix::from_float(pib), parity, border)).hi();
    return Interval(std::max(1.0, n));
}

Interval norm_B(const Eigen::MatrixXd& B)
{
    IMatrix m = IMatrix::from_float(B);
    for (int i = 0; i < m.rows(); ++i)
        m(i, i) += Interval(1.0);
    const double n = op_norm2_upper(to_orthonormal(m, Parity::even, 0)).hi();
    return Interval(std::max(1.0, n));
}

DefectBounds defect_bounds(const LinearSystem& s, const Eigen::MatrixXd& pib)
{
    check_border(s);
    const int f = first_index(s.parity);
    const int b = s.border();
    const int n = s.N + 1 - f;
    if (pib.rows() != b + n || pib.cols() != b + n)
        throw DomainMismatch("approximate inverse does not match the system window");
    const int nv = s.v.max_index();
    const int max_col = s.N + nv;
    const auto lv = s.symbol.table(max_col, s.d);

    // rows of the window: I - (pi^N + B) D F L^{-1}
    const IMatrix m = system_rows(s, max_col, lv);
    IMatrix top = kernels::matmul(pib, m);
    for (int i = 0; i < top.rows(); ++i)
        for (int j = 0; j < top.cols(); ++j)
            top(i, j) = (i == j ? Interval(1.0) : Interval(0.0)) - top(i, j);
    const double top_norm = op_norm2_upper(to_orthonormal(top, s.parity, b)).hi();

    // rows beyond N fed by the window: pi_N (v * L^{-1}) pi^N
    double low_norm = 0.0;
    if (nv > 0) {
        const IMatrix all = mult_matrix(s.v, s.parity, max_col, s.N);
        IMatrix low(nv, n);
        for (int i = 0; i < nv; ++i)
            for (int k = 0; k < n; ++k)
                low(i, k) = all(n + i, k) / lv[k + f];
        low_norm = op_norm2_upper(to_orthonormal(low, s.parity, 0, s.N + 1, f)).hi();
    }

    DefectBounds out;
    out.Z1N = sqrt(sqr(Interval(top_norm)) + sqr(Interval(low_norm)));
    out.Z1_tail = norm_l1(s.v) * s.symbol.tail_inv(s.N, s.d);
    out.Z1 = sqrt(sqr(out.Z1N) + sqr(out.Z1_tail));
    out.normB = norm_pib(pib, s.parity, b);
    const KernelConstants k = kernel_constants(s.symbol);
    out.a_decay = k.a;
    out.C0 = k.C0;
    const ZuParts zu = zu_parts(s.v, s.symbol, s.d);
    out.Zu1 = zu.Zu1;
    out.Zu2 = zu.Zu2;
    out.Zu = out.normB * sqrt(sqr(zu.Zu1) + sqr(zu.Zu2));
    return out;
}

Interval apply_inverse_norm(const LinearSystem& s, const Eigen::MatrixXd& pib, const Interval& r_scalar, const ISeq& r)
{
    const int f = first_index(s.parity);
    const int b = s.border();
    const int n = s.N + 1 - f;
    if (r.parity() != s.parity)
        throw DomainMismatch("residual has the wrong parity");
    IMatrix x(b + n, 1);
    if (b)
        x(0, 0) = r_scalar;
    for (int k = 0; k < n; ++k)
        x(b + k, 0) = r.at(k + f);
    const IMatrix y = kernels::matmul(pib, x);
    double lo = 0.0, hi = 0.0;
    auto add = [&](const Interval& t) {
        lo = rnd::add_down(lo, t.lo());
        hi = rnd::add_up(hi, t.hi());
    };
    if (b)
        add(sqr(y(0, 0)));
    for (int k = 0; k < n; ++k)
        add(sqr(y(b + k, 0)) * Interval(fold_weight(k + f)));
    for (int k = s.N + 1; k <= r.max_index(); ++k)
        add(sqr(r[k]) * Interval(2.0));
    return sqrt(Interval::raw(std::max(lo, 0.0), hi));
}

LinearSystem soliton_system(const ISeq& u0, const KawaharaParams& p, int N)
{
    LinearSystem s;
    s.parity = Parity::even;
    s.N = N;
    s.d = u0.d();
    s.symbol = p.l();
    s.v = scale(Interval(2.0) * p.lambda3, u0);
    return s;
}

Interval bound_Y0(const ISeq& u0, const Eigen::MatrixXd& pib, const KawaharaParams& p, const ISeq& psi, int N)
{
    const LinearSystem s = soliton_system(u0, p, N);
    const ISeq F = residual_F(u0, p, psi);
    return sqrt(Interval(2.0 * u0.d())) * apply_inverse_norm(s, pib, Interval(0.0), F);
}

Z1Parts bound_Z1(const ISeq& u0, const Eigen::MatrixXd& pib, const KawaharaParams& p, int N)
{
    const DefectBounds db = defect_bounds(soliton_system(u0, p, N), pib);
    return {db.Z1N, db.Z1_tail, db.Z1};
}

ZuBound bound_Zu(const ISeq& u0, const Eigen::MatrixXd& pib, const KawaharaParams& p, double d)
{
    const ISeq v = scale(Interval(2.0) * p.lambda3, u0);
    const ZuParts zu = zu_parts(v, p.l(), d);
    const Interval nb = norm_pib(pib, Parity::even);
    return {zu.Zu1, zu.Zu2, nb * sqrt(sqr(zu.Zu1) + sqr(zu.Zu2))};
}

Interval bound_Z2(const KawaharaParams& p, const Eigen::MatrixXd& pib)
{
    return Interval(2.0) * p.kappa * norm_pib(pib, Parity::even);
}

BoundSet compute_bounds(const ISeq& u0, const Eigen::MatrixXd& pib, const KawaharaParams& p, int N)
{
    const LinearSystem s = soliton_system(u0, p, N);
    const DefectBounds db = defect_bounds(s, pib);
    BoundSet b;
    b.N = N;
    b.N0 = u0.max_index();
    b.d = u0.d();
    const ISeq psi = ISeq::zeros(u0.d(), Parity::even, 0);
    b.Y0 = sqrt(Interval(2.0 * u0.d())) * apply_inverse_norm(s, pib, Interval(0.0), residual_F(u0, p, psi));
    b.Z1N = db.Z1N;
    b.Z1_tail = db.Z1_tail;
    b.Z1 = db.Z1;
    b.Zu1 = db.Zu1;
    b.Zu2 = db.Zu2;
    b.Zu = db.Zu;
    b.normB = db.normB;
    b.Z2_coeff = Interval(2.0) * p.kappa * db.normB;
    return b;
}

} // namespace kawa
