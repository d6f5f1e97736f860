#include "gqs/d21a.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gqs {

namespace {

constexpr int kDim = 17;

// slots 0..2: h1 h2 h3; 3..8: e1 f1 e2 f2 e3 f3 (the a_i^+- and t3^+-)
constexpr int H(int k) { return k; }                 // k = 0,1,2
constexpr int E(int k) { return 3 + 2 * k; }
constexpr int F(int k) { return 4 + 2 * k; }

// slots 9..16: odd tensor basis v_{s1} x v_{s2} x v_{s3}
int odd_slot(int s1, int s2, int s3)
{
    static const int order[2][2][2] = {
        // [s1>0][s2>0][s3>0], indices chosen so that the CAO vectors come first
        {{12, 11}, {16, 15}},   // s1=- : b-1-, b+1-, o-+-, o-++
        {{14, 13}, {10, 9}},    // s1=+ : o+--, o+-+, b-1+, b+1+
    };
    return order[s1 > 0][s2 > 0][s3 > 0];
}

void odd_signs(int slot, int s[3])
{
    for (int s1 : {-1, 1})
        for (int s2 : {-1, 1})
            for (int s3 : {-1, 1})
                if (odd_slot(s1, s2, s3) == slot) {
                    s[0] = s1;
                    s[1] = s2;
                    s[2] = s3;
                    return;
                }
    throw std::logic_error("bad odd slot");
}

Vec zero_vec() { return Vec(kDim, Rat(0)); }

void axpy(Vec& acc, const Rat& c, const Vec& v)
{
    for (int i = 0; i < kDim; ++i)
        acc[static_cast<std::size_t>(i)] += c * v[static_cast<std::size_t>(i)];
}

bool is_zero(const Vec& v)
{
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == Rat(0); });
}

// symplectic form <v+,v-> = 1 on one tensor slot
int form(int a, int b)
{
    if (a > 0 && b < 0)
        return 1;
    if (a < 0 && b > 0)
        return -1;
    return 0;
}

// raw brackets of the three-sl(2) tensor model, before CAO normalization
std::vector<std::vector<Vec>> raw_table(const D21Params& p, const std::array<int, 3>& tau)
{
    const auto sigma = p.sigma();
    std::vector<std::vector<Vec>> tbl(kDim, std::vector<Vec>(kDim, zero_vec()));

    auto set = [&](int i, int j, int k, const Rat& c) {
        tbl[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
           [static_cast<std::size_t>(k)] += c;
    };

    // even-even: sl(2) relations within each factor
    for (int k = 0; k < 3; ++k) {
        set(H(k), E(k), E(k), Rat(2));
        set(E(k), H(k), E(k), Rat(-2));
        set(H(k), F(k), F(k), Rat(-2));
        set(F(k), H(k), F(k), Rat(2));
        set(E(k), F(k), H(k), Rat(1));
        set(F(k), E(k), H(k), Rat(-1));
    }

    // even-odd: factor-k action on the k-th tensor slot
    for (int os = 9; os < kDim; ++os) {
        int s[3];
        odd_signs(os, s);
        for (int k = 0; k < 3; ++k) {
            set(H(k), os, os, Rat(s[k]));
            set(os, H(k), os, Rat(-s[k]));
            int flipped[3] = {s[0], s[1], s[2]};
            flipped[k] = -flipped[k];
            int target = odd_slot(flipped[0], flipped[1], flipped[2]);
            if (s[k] < 0) {   // e_k raises
                set(E(k), os, target, Rat(1));
                set(os, E(k), target, Rat(-1));
            } else {          // f_k lowers
                set(F(k), os, target, Rat(1));
                set(os, F(k), target, Rat(-1));
            }
        }
    }

    // odd-odd: {x,y} = sum_k tau_k sigma_k gamma_k(x_k,y_k) prod_{l!=k} <x_l,y_l>
    for (int oi = 9; oi < kDim; ++oi)
        for (int oj = 9; oj < kDim; ++oj) {
            int a[3], b[3];
            odd_signs(oi, a);
            odd_signs(oj, b);
            for (int k = 0; k < 3; ++k) {
                int prod = 1;
                for (int l = 0; l < 3; ++l)
                    if (l != k)
                        prod *= form(a[l], b[l]);
                if (prod == 0)
                    continue;
                Rat c = sigma[static_cast<std::size_t>(k)] * Rat(tau[static_cast<std::size_t>(k)])
                        * Rat(prod);
                if (a[k] > 0 && b[k] > 0)
                    set(oi, oj, E(k), Rat(2) * c);
                else if (a[k] < 0 && b[k] < 0)
                    set(oi, oj, F(k), Rat(-2) * c);
                else
                    set(oi, oj, H(k), -c);
            }
        }
    return tbl;
}

std::vector<D21Basis> make_basis()
{
    auto even = [](std::string l, Coords r, int g) {
        return D21Basis{std::move(l), Parity::Even, std::move(r), g};
    };
    auto odd = [](std::string l, Coords r, int g) {
        return D21Basis{std::move(l), Parity::Odd, std::move(r), g};
    };
    return {
        even("h1", {}, 0),
        even("h2", {}, 0),
        even("h3", {}, 0),
        even("a1+", {4, 0, 0}, 1),
        even("a1-", {-4, 0, 0}, -1),
        even("a2+", {0, 4, 0}, 1),
        even("a2-", {0, -4, 0}, -1),
        even("t3+", {0, 0, 4}, 0),
        even("t3-", {0, 0, -4}, 0),
        odd("b+1+", {2, 2, 2}, 1),
        odd("b-1+", {2, 2, -2}, 1),
        odd("b+1-", {-2, -2, 2}, -1),
        odd("b-1-", {-2, -2, -2}, -1),
        odd("o+-+", {2, -2, 2}, 0),
        odd("o+--", {2, -2, -2}, 0),
        odd("o-++", {-2, 2, 2}, 0),
        odd("o-+-", {-2, 2, -2}, 0),
    };
}

} // namespace

int StructureTable::index_of(const std::string& label) const
{
    for (int i = 0; i < dim(); ++i)
        if (basis[static_cast<std::size_t>(i)].label == label)
            return i;
    throw std::out_of_range("no basis element labeled " + label);
}

Vec StructureTable::unit(const std::string& label) const
{
    Vec v = zero_vec();
    v[static_cast<std::size_t>(index_of(label))] = Rat(1);
    return v;
}

Vec StructureTable::bracket(const Vec& x, const Vec& y) const
{
    Vec out = zero_vec();
    for (int i = 0; i < kDim; ++i) {
        if (x[static_cast<std::size_t>(i)] == Rat(0))
            continue;
        for (int j = 0; j < kDim; ++j) {
            if (y[static_cast<std::size_t>(j)] == Rat(0))
                continue;
            axpy(out, x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)],
                 table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
        }
    }
    return out;
}

std::vector<std::string> check_super_jacobi(const StructureTable& t)
{
    std::vector<std::string> bad;
    auto deg = [&](int i) { return t.basis[static_cast<std::size_t>(i)].parity == Parity::Odd; };
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j)
            for (int k = 0; k < kDim; ++k) {
                Vec xi = zero_vec(), xj = zero_vec(), xk = zero_vec();
                xi[static_cast<std::size_t>(i)] = Rat(1);
                xj[static_cast<std::size_t>(j)] = Rat(1);
                xk[static_cast<std::size_t>(k)] = Rat(1);
                // (-1)^{|i||k|}[x_i,[x_j,x_k]] + cyclic = 0
                Vec acc = zero_vec();
                axpy(acc, Rat(deg(i) && deg(k) ? -1 : 1), t.bracket(xi, t.bracket(xj, xk)));
                axpy(acc, Rat(deg(j) && deg(i) ? -1 : 1), t.bracket(xj, t.bracket(xk, xi)));
                axpy(acc, Rat(deg(k) && deg(j) ? -1 : 1), t.bracket(xk, t.bracket(xi, xj)));
                if (!is_zero(acc)) {
                    std::ostringstream os;
                    os << "jacobi(" << t.basis[static_cast<std::size_t>(i)].label << ", "
                       << t.basis[static_cast<std::size_t>(j)].label << ", "
                       << t.basis[static_cast<std::size_t>(k)].label << ")";
                    bad.push_back(os.str());
                }
            }
    return bad;
}

RelationReport verify_relations(const StructureTable& t)
{
    RelationReport rep;
    const auto sigma = t.params.sigma();
    const Rat alpha = t.params.alpha;

    auto U = [&](const std::string& n) { return t.unit(n); };
    auto B = [&](const Vec& a, const Vec& b) { return t.bracket(a, b); };
    auto scaled = [&](const Rat& c, const Vec& v) {
        Vec out = zero_vec();
        axpy(out, c, v);
        return out;
    };
    auto check = [&](const std::string& name, const Vec& lhs, const Vec& rhs) {
        ++rep.checked;
        Vec d = lhs;
        axpy(d, Rat(-1), rhs);
        if (!is_zero(d))
            rep.failures.push_back(name);
    };
    auto a = [&](int i, int p) {   // i in {1,2}, p = +-1
        return U("a" + std::to_string(i) + (p > 0 ? "+" : "-"));
    };
    auto b = [&](int k, int p) {   // k in {-1,+1}, p = +-1
        if (k != 1 && k != -1)
            return zero_vec();
        return U(std::string("b") + (k > 0 ? "+1" : "-1") + (p > 0 ? "+" : "-"));
    };

    // all creation operators mutually supercommute; likewise all annihilation
    for (int p : {1, -1}) {
        std::vector<std::pair<std::string, Vec>> level = {
            {"a1", a(1, p)}, {"a2", a(2, p)}, {"b+1", b(1, p)}, {"b-1", b(-1, p)}};
        for (const auto& [nx, x] : level)
            for (const auto& [ny, y] : level)
                check("supercommute(" + std::string(p > 0 ? "+" : "-") + "," + nx + "," + ny + ")",
                      B(x, y), zero_vec());
    }

    // quadratic relations
    check("[a1+,a2-]=0", B(a(1, 1), a(2, -1)), zero_vec());
    check("[a2+,a1-]=0", B(a(2, 1), a(1, -1)), zero_vec());
    for (int k : {1, -1})
        for (int p : {1, -1}) {
            std::ostringstream os;
            os << "[a1^" << p << ",b_" << k << "^" << -p << "]=[a2^" << -p << ",b_" << k << "^"
               << p << "]";
            check(os.str(), B(a(1, p), b(k, -p)), B(a(2, -p), b(k, p)));
        }
    {
        Vec acc = zero_vec();
        axpy(acc, Rat(2) * sigma[0], B(a(1, -1), a(1, 1)));
        axpy(acc, Rat(2) * sigma[1], B(a(2, -1), a(2, 1)));
        axpy(acc, Rat(1), B(b(-1, -1), b(1, 1)));
        axpy(acc, Rat(-1), B(b(1, -1), b(-1, 1)));
        check("2s1[a1-,a1+]+2s2[a2-,a2+]+{b-1-,b+1+}-{b+1-,b-1+}=0", acc, zero_vec());
    }

    // triple relations
    for (int i : {1, 2})
        for (int j : {1, 2})
            for (int p : {1, -1}) {
                std::ostringstream os;
                os << "[[a" << i << "+,a" << i << "-],a" << j << "^" << p << "]";
                check(os.str(), B(B(a(i, 1), a(i, -1)), a(j, p)),
                      scaled(Rat(p * 2 * (i == j ? 1 : 0)), a(j, p)));
            }
    for (int i : {1, 2})
        for (int k : {1, -1})
            for (int p : {1, -1}) {
                std::ostringstream os;
                os << "[[a" << i << "+,a" << i << "-],b_" << k << "^" << p << "]";
                check(os.str(), B(B(a(i, 1), a(i, -1)), b(k, p)), scaled(Rat(p), b(k, p)));
            }
    for (int i : {-1, 1})
        for (int j : {-1, 1})
            for (int k : {1, 2})
                for (int p : {1, -1}) {
                    std::ostringstream os;
                    os << "[{b_" << i << "+,b_" << j << "-},a" << k << "^" << p << "]";
                    check(os.str(), B(B(b(i, 1), b(j, -1)), a(k, p)),
                          scaled(Rat(-p * (j - i)) * sigma[static_cast<std::size_t>(k - 1)],
                                 a(k, p)));
                }
    for (int i : {-1, 1})
        for (int j : {-1, 1})
            for (int k : {-1, 1})
                for (int xi : {1, -1}) {
                    std::ostringstream os;
                    os << "[{b_" << i << "+,b_" << j << "-},b_" << k << "^" << xi << "]";
                    Vec rhs = zero_vec();
                    if (xi > 0)
                        axpy(rhs, -alpha * Rat(k - i), b(i + j + k, 1));
                    else
                        axpy(rhs, -alpha * Rat(k - j), b(i + j + k, -1));
                    check(os.str(), B(B(b(i, 1), b(j, -1)), b(k, xi)), rhs);
                }
    return rep;
}

std::vector<std::string> check_grade_compatibility(const StructureTable& t)
{
    std::vector<std::string> bad;
    for (int i = 0; i < kDim; ++i)
        for (int j = 0; j < kDim; ++j) {
            int g = t.basis[static_cast<std::size_t>(i)].grade
                    + t.basis[static_cast<std::size_t>(j)].grade;
            const Vec& v = t.table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            for (int k = 0; k < kDim; ++k)
                if (v[static_cast<std::size_t>(k)] != Rat(0)
                    && t.basis[static_cast<std::size_t>(k)].grade != g)
                    bad.push_back("[" + t.basis[static_cast<std::size_t>(i)].label + ","
                                  + t.basis[static_cast<std::size_t>(j)].label + "] off-grade");
        }
    return bad;
}

StructureTable build_d21a(const D21Params& params)
{
    if (!params.valid())
        throw std::invalid_argument("alpha must avoid 0 and -1");

    for (int t1 : {1, -1})
        for (int t2 : {1, -1})
            for (int t3 : {1, -1}) {
                StructureTable t;
                t.params = params;
                t.tau = {t1, t2, t3};
                t.basis = make_basis();
                auto raw = raw_table(params, t.tau);
                // the sign rescalings below do not affect the Jacobi identity,
                // so it can be settled once per tau pattern
                t.table = raw;
                if (!check_super_jacobi(t).empty())
                    continue;
                // normalization signs for the odd CAO vectors
                for (auto [tt, ss] : {std::pair{1, -1}, {-1, 1}, {1, 1}, {-1, -1}}) {
                    t.t = tt;
                    t.s = ss;
                    std::vector<Rat> lam(kDim, Rat(1));
                    lam[9] = lam[11] = Rat(tt);    // b_{+1}^+-
                    lam[10] = lam[12] = Rat(ss);   // b_{-1}^+-
                    t.table.assign(kDim, std::vector<Vec>(kDim, zero_vec()));
                    for (int i = 0; i < kDim; ++i)
                        for (int j = 0; j < kDim; ++j)
                            for (int k = 0; k < kDim; ++k)
                                t.table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                                       [static_cast<std::size_t>(k)] =
                                    raw[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                                       [static_cast<std::size_t>(k)]
                                    * lam[static_cast<std::size_t>(i)]
                                    * lam[static_cast<std::size_t>(j)]
                                    * lam[static_cast<std::size_t>(k)];
                    if (!verify_relations(t).ok())
                        continue;
                    return t;
                }
            }
    throw std::logic_error("no sign pattern satisfies the defining relations");
}

} // namespace gqs
