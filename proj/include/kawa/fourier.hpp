#ifndef KAWA_FOURIER_HPP
#define KAWA_FOURIER_HPP

#include <functional>
#include <string>
#include <vector>

#include "kawa/imatrix.hpp"
#include "kawa/interval.hpp"

namespace kawa
{

// Even sequences hold u_n = u_{-n} and represent u_0 + 2 sum u_n cos(pi n x / d).
// Odd sequences hold s_n with complex coefficients v_n = -i s_n, v_{-n} = i s_n,
// and represent 2 sum s_n sin(pi n x / d); index 0 is always zero.
enum class Parity
{
    even,
    odd
};

inline Parity operator*(Parity a, Parity b) { return a == b ? Parity::even : Parity::odd; }
inline int first_index(Parity p) { return p == Parity::even ? 0 : 1; }
std::string to_string(Parity p);
Parity parity_from_string(const std::string& s);

template <class T>
class FourierSeq
{
public:
    FourierSeq() = default;
    FourierSeq(double d, Parity parity, std::vector<T> coeffs);
    static FourierSeq zeros(double d, Parity parity, int max_index);

    double d() const { return d_; }
    Parity parity() const { return parity_; }
    int max_index() const { return static_cast<int>(c_.size()) - 1; }
    int size() const { return static_cast<int>(c_.size()); }

    const T& operator[](int n) const { return c_[n]; }
    T& operator[](int n) { return c_[n]; }
    // Two-sided real coefficient; zero outside the stored window.
    T at(int n) const;

    const std::vector<T>& coeffs() const { return c_; }

private:
    double d_ = 1.0;
    Parity parity_ = Parity::even;
    std::vector<T> c_{T(0.0)};
};

using FSeq = FourierSeq<double>;
using ISeq = FourierSeq<Interval>;

ISeq to_interval(const FSeq& u);
FSeq mid(const ISeq& u);

// Full two-sided convolution, folded back to the stored half. The plain
// version parallelizes over output indices; conv_serial is the reference.
template <class T>
FourierSeq<T> conv(const FourierSeq<T>& u, const FourierSeq<T>& v);
template <class T>
FourierSeq<T> conv_serial(const FourierSeq<T>& u, const FourierSeq<T>& v);

template <class T>
FourierSeq<T> operator+(const FourierSeq<T>& u, const FourierSeq<T>& v);
template <class T>
FourierSeq<T> operator-(const FourierSeq<T>& u, const FourierSeq<T>& v);
template <class T>
FourierSeq<T> scale(const T& a, const FourierSeq<T>& u);

// Weight of a stored index in two-sided sums: 1 for n = 0, 2 otherwise.
inline int fold_weight(int n) { return n == 0 ? 1 : 2; }

Interval norm_l1(const ISeq& u);
Interval norm_l2(const ISeq& u);
Interval inner(const ISeq& u, const ISeq& v);
double norm_l1(const FSeq& u);
double norm_l2(const FSeq& u);
double inner(const FSeq& u, const FSeq& v);

struct DiagSymbol
{
    std::string tag;
    std::function<Interval(const Interval& xi)> eval;

    // Value at the lattice frequency n / (2d).
    Interval at(int n, double d) const;
    std::vector<Interval> table(int max_index, double d) const;
};

Interval norm_l(const ISeq& u, const DiagSymbol& l);

ISeq apply_diag(const DiagSymbol& sym, const ISeq& u, bool invert = false);
ISeq apply_diag(const std::vector<Interval>& values, const ISeq& u, bool invert = false);

enum class Window
{
    inside, // pi^N: keep |n| <= N
    outside // pi_N: zero |n| <= N
};

template <class T>
FourierSeq<T> project(const FourierSeq<T>& u, int n, Window which);
template <class T>
FourierSeq<T> truncate(const FourierSeq<T>& u, int n);

std::vector<double> sample(const FSeq& u, const std::vector<double>& xs);

// Finite block acting on indices up to N plus a diagonal tail beyond.
struct SeqOperator
{
    int N = 0;
    IMatrix block;
    DiagSymbol tail;

    ISeq apply(const ISeq& u) const;
};

} // namespace kawa

#endif
