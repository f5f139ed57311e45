#pragma once

#include <array>
#include <functional>
#include <vector>

#include "sp11/group.hpp"
#include "sp11/rep.hpp"

namespace sp11 {

// Element of the Hurwitz order in the Z-basis 1, î, ĵ, ω = (1+î+ĵ+k̂)/2.
struct OrderElement {
    std::array<long, 4> c{};

    QRat value() const;
    static OrderElement from(const QRat& q);  // throws DomainError outside the order
    friend bool operator==(const OrderElement& a, const OrderElement& b) { return a.c == b.c; }
};

// Hurwitz membership: 2q has integer coordinates of equal parity.
bool order_contains(const QRat& q);

// Coordinates of q in the basis 1, î, ĵ, ω (rational in general).
std::array<Rational, 4> hurwitz_coordinates(const QRat& q);

// 0 iff every entry is in the order and g* diag(1,-1) g = diag(1,-1).
double gz_membership(const QMatRat& g);

class IntegralGroupElement {
public:
    explicit IntegralGroupElement(QMatRat g);  // throws DomainError if not in G(Z)
    const QMatRat& matrix() const { return g_; }

private:
    QMatRat g_;
};

struct Level {
    long n;
    explicit Level(long v);
};

// g ≡ I mod N·O, decided by (g - I)/N lying in the order entrywise.
bool gammaN_membership(const IntegralGroupElement& g, Level level);
// Same question decided from the Z-basis coordinates of g - I modulo N.
bool gammaN_by_reduction(const IntegralGroupElement& g, Level level);

// Hurwitz quaternions of reduced norm exactly n.
std::vector<QRat> hurwitz_of_norm(long n);
std::vector<QRat> hurwitz_units();

// Elements of G(Z) whose entries all have reduced norm at most height.
std::vector<IntegralGroupElement> search_gz(long height);

// ω = (1+î+ĵ+k̂)/2, of order 6.
QRat hurwitz_omega();
// F = {diag(ω^a, ω^b)}: abelian, closed under †.
std::vector<QMatRat> finite_diagonal_subgroup();

using RowFunction = std::function<std::vector<QDbl>(const QDbl&)>;

// Max-norm of h(γq) - |m|² m h(q) R_{n-1}(m); m = cq+d (rho) or a+bq̄ (lambda).
double automorphy_residual(const RowFunction& h, const QMatDbl& g, const QDbl& q, int n, Side side = Side::rho);

// Average of m⁻¹|m|⁻² h(γq) R_{n-1}(m)⁻¹ over a list of elements with
// constant, mutually commuting factors.
RowFunction symmetrize(const RowFunction& h, const std::vector<QMatRat>& group, int n);

}  // namespace sp11
