#include "poisson/multivector.hpp"

#include <algorithm>
#include <bit>
#include <utility>

namespace poisson {

namespace {

// Odd-variable model: a multivector is a sum of f * th_S over subsets S of
// {x,y,z}, where th_S is the product of th_i (i in S) in increasing order.
using Super = std::array<Polynomial, 8>;

struct Slot {
    unsigned mask;
    int sign;  // basis element = sign * th_mask
};

constexpr Slot kSlots[4][3] = {
    {{0b000, 1}, {0, 0}, {0, 0}},
    {{0b001, 1}, {0b010, 1}, {0b100, 1}},
    {{0b110, 1}, {0b101, -1}, {0b011, 1}},
    {{0b111, 1}, {0, 0}, {0, 0}},
};

int popcount(unsigned m) { return std::popcount(m); }

// Sign of th_S * th_T once reordered; 0 if they overlap.
int product_sign(unsigned s, unsigned t)
{
    if (s & t)
        return 0;
    int inversions = 0;
    for (int i = 0; i < 3; ++i)
        if (s & (1u << i))
            inversions += popcount(t & ((1u << i) - 1));
    return inversions % 2 ? -1 : 1;
}

// d/dth_i acting from the left on th_S.
int left_derivative_sign(unsigned s, int i) { return popcount(s & ((1u << i) - 1)) % 2 ? -1 : 1; }

// d/dth_i acting from the right on th_S.
int right_derivative_sign(unsigned s, int i) { return popcount(s >> (i + 1)) % 2 ? -1 : 1; }

Super to_super(const MultiVector& v)
{
    Super out;
    if (v.degree() > 3)
        return out;
    for (int i = 0; i < wedge_basis_size(v.degree()); ++i) {
        const Slot& slot = kSlots[v.degree()][i];
        out[slot.mask] += slot.sign == 1 ? v[i] : -v[i];
    }
    return out;
}

MultiVector from_super(const Super& s, int degree)
{
    MultiVector out(degree);
    if (degree > 3)
        return out;
    for (int i = 0; i < wedge_basis_size(degree); ++i) {
        const Slot& slot = kSlots[degree][i];
        out[i] = slot.sign == 1 ? s[slot.mask] : -s[slot.mask];
    }
    return out;
}

void accumulate_product(Super& acc, unsigned s, const Polynomial& f, unsigned t, const Polynomial& g, int sign)
{
    if (f.is_zero() || g.is_zero())
        return;
    int ps = product_sign(s, t);
    if (ps == 0)
        return;
    Polynomial fg = f * g;
    if (ps * sign < 0)
        acc[s | t] -= fg;
    else
        acc[s | t] += fg;
}

}  // namespace

int wedge_basis_size(int q)
{
    static constexpr int sizes[4] = {1, 3, 3, 1};
    return (q >= 0 && q <= 3) ? sizes[q] : 0;
}

MultiVector::MultiVector(int degree) : degree_(degree), components_(static_cast<std::size_t>(wedge_basis_size(degree)))
{
    if (degree < 0)
        throw ContractViolation("negative multivector degree");
}

MultiVector::MultiVector(int degree, std::vector<Polynomial> components)
    : degree_(degree), components_(std::move(components))
{
    if (degree < 0 || static_cast<int>(components_.size()) != wedge_basis_size(degree))
        throw ContractViolation("component count does not match degree " + std::to_string(degree));
}

MultiVector MultiVector::basis(int q, int index)
{
    MultiVector v(q);
    v[index] = Polynomial(1);
    return v;
}

bool MultiVector::is_zero() const
{
    return std::all_of(components_.begin(), components_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

bool MultiVector::is_homogeneous(int d) const
{
    return std::all_of(components_.begin(), components_.end(),
                       [d](const Polynomial& p) { return p.is_homogeneous(d); });
}

int MultiVector::poly_degree() const
{
    int d = -1;
    for (const auto& c : components_)
        d = std::max(d, c.degree());
    return d;
}

MultiVector& MultiVector::operator+=(const MultiVector& other)
{
    if (other.degree_ != degree_)
        throw ContractViolation("adding multivectors of different degrees");
    for (std::size_t i = 0; i < components_.size(); ++i)
        components_[i] += other.components_[i];
    return *this;
}

MultiVector& MultiVector::operator-=(const MultiVector& other)
{
    if (other.degree_ != degree_)
        throw ContractViolation("subtracting multivectors of different degrees");
    for (std::size_t i = 0; i < components_.size(); ++i)
        components_[i] -= other.components_[i];
    return *this;
}

MultiVector operator-(MultiVector a)
{
    for (auto& c : a.components_)
        c = -c;
    return a;
}

MultiVector operator*(const Polynomial& f, MultiVector a)
{
    for (auto& c : a.components_)
        c = f * c;
    return a;
}

bool operator==(const MultiVector& a, const MultiVector& b)
{
    if (a.is_zero() && b.is_zero())
        return true;
    return a.degree_ == b.degree_ && a.components_ == b.components_;
}

BasisSlot wedge_slot(const std::vector<Var>& vars)
{
    std::vector<int> idx;
    for (Var v : vars)
        idx.push_back(static_cast<int>(v));
    int sign = 1;
    // Bubble sort keeps track of the permutation parity.
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j + 1 < idx.size() - i; ++j)
            if (idx[j] > idx[j + 1]) {
                std::swap(idx[j], idx[j + 1]);
                sign = -sign;
            }
    unsigned mask = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i > 0 && idx[i] == idx[i - 1])
            return {-1, 0};
        mask |= 1u << idx[i];
    }
    const int q = static_cast<int>(idx.size());
    if (q > 3)
        return {-1, 0};
    for (int i = 0; i < wedge_basis_size(q); ++i)
        if (kSlots[q][i].mask == mask)
            return {i, sign * kSlots[q][i].sign};
    return {-1, 0};
}

MultiVector wedge(const MultiVector& a, const MultiVector& b)
{
    const int degree = a.degree() + b.degree();
    if (degree > 3)
        return MultiVector(degree);
    Super sa = to_super(a), sb = to_super(b), out;
    for (unsigned s = 0; s < 8; ++s)
        for (unsigned t = 0; t < 8; ++t)
            accumulate_product(out, s, sa[s], t, sb[t], 1);
    return from_super(out, degree);
}

MultiVector schouten_bracket(const MultiVector& a, const MultiVector& b)
{
    // [P, Q] = sum_i (P d<-/dth_i)(d/dx_i Q) - (d/dx_i P)(d->/dth_i Q)
    const int degree = a.degree() + b.degree() - 1;
    if (degree < 0)
        throw ContractViolation("Schouten bracket of two functions");
    if (degree > 3)
        return MultiVector(degree);
    Super sa = to_super(a), sb = to_super(b), out;
    for (int i = 0; i < 3; ++i) {
        const Var v = static_cast<Var>(i);
        const unsigned bit = 1u << i;
        for (unsigned s = 0; s < 8; ++s) {
            if (sa[s].is_zero())
                continue;
            if (s & bit) {
                int rs = right_derivative_sign(s, i);
                for (unsigned t = 0; t < 8; ++t)
                    if (!sb[t].is_zero())
                        accumulate_product(out, s & ~bit, sa[s], t, sb[t].partial(v), rs);
            }
            Polynomial da = sa[s].partial(v);
            if (da.is_zero())
                continue;
            for (unsigned t = 0; t < 8; ++t)
                if ((t & bit) && !sb[t].is_zero())
                    accumulate_product(out, s, da, t & ~bit, sb[t], -left_derivative_sign(t, i));
        }
    }
    return from_super(out, degree);
}

std::vector<Rational> evaluate(const MultiVector& v, const RationalPoint& pt)
{
    std::vector<Rational> out;
    for (const auto& c : v.components())
        out.push_back(c.evaluate(pt));
    return out;
}

Polynomial divergence(const MultiVector& x)
{
    if (x.degree() != 1)
        throw ContractViolation("divergence needs a vector field");
    return x[0].partial(Var::x) + x[1].partial(Var::y) + x[2].partial(Var::z);
}

MultiVector hamiltonian_vector_field(const MultiVector& pi, const Polynomial& g)
{
    return -schouten_bracket(pi, MultiVector::scalar(g));
}

MultiVector modular_vector_field(const MultiVector& pi)
{
    if (pi.degree() != 2)
        throw ContractViolation("modular vector field needs a bivector");
    // g -> div(X_g) is a derivation; its value on the coordinates gives the components.
    MultiVector out(1);
    for (int k = 0; k < 3; ++k)
        out[k] = divergence(hamiltonian_vector_field(pi, Polynomial::var(static_cast<Var>(k))));
    return out;
}

namespace fields {

MultiVector euler_plane() { return MultiVector::vector(Polynomial::var(Var::x), Polynomial::var(Var::y), 0); }

MultiVector rotation() { return MultiVector::vector(-Polynomial::var(Var::y), Polynomial::var(Var::x), 0); }

MultiVector euler_space()
{
    return MultiVector::vector(Polynomial::var(Var::x), Polynomial::var(Var::y), Polynomial::var(Var::z));
}

MultiVector euler_weighted(const Rational& tau)
{
    return MultiVector::vector(Polynomial::var(Var::x), tau * Polynomial::var(Var::y), 0);
}

MultiVector d(Var v) { return MultiVector::basis(1, static_cast<int>(v)); }

}  // namespace fields

}  // namespace poisson
