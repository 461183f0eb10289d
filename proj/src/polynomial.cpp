#include "interlace/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <sstream>

#include "interlace/errors.hpp"

namespace interlace {

IntPolynomial IntPolynomial::from_coeffs(std::vector<Int> descending) {
    std::size_t lead = 0;
    while (lead < descending.size() && descending[lead] == 0) ++lead;
    IntPolynomial p;
    p.coeffs_.assign(descending.begin() + static_cast<std::ptrdiff_t>(lead), descending.end());
    return p;
}

IntPolynomial IntPolynomial::monomial(const Int& c, std::size_t k) {
    if (c == 0) return {};
    IntPolynomial p;
    p.coeffs_.assign(k + 1, Int(0));
    p.coeffs_[0] = c;
    return p;
}

const Int& IntPolynomial::leading() const {
    if (is_zero()) throw ZeroPolynomial("leading coefficient of the zero polynomial");
    return coeffs_[0];
}

Int IntPolynomial::coeff(std::size_t k) const {
    if (is_zero() || k >= coeffs_.size()) return Int(0);
    return coeffs_[coeffs_.size() - 1 - k];
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
    std::vector<Int> out(n, Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[n - coeffs_.size() + i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[n - o.coeffs_.size() + i] += o.coeffs_[i];
    return from_coeffs(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const {
    IntPolynomial p(*this);
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const { return *this + (-o); }

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Int> out(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    return from_coeffs(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const Int& c) const {
    if (c == 0) return {};
    IntPolynomial p(*this);
    for (auto& a : p.coeffs_) a *= c;
    return p;
}

IntPolynomial IntPolynomial::derivative() const {
    if (degree() <= 0) return {};
    std::vector<Int> out(coeffs_.size() - 1);
    long d = degree();
    for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i) out[i] = coeffs_[i] * Int(d - static_cast<long>(i));
    return from_coeffs(std::move(out));
}

IntPolynomial IntPolynomial::shift(const Int& n) const {
    // Repeated synthetic division by (x - n): each round's remainder is the
    // next Taylor coefficient of f(x + n).
    if (is_zero()) return {};
    std::vector<Int> work = coeffs_;
    std::size_t d = coeffs_.size() - 1;
    std::vector<Int> ascending(d + 1);
    for (std::size_t round = 0; round <= d; ++round) {
        for (std::size_t j = 1; j + round <= d; ++j) work[j] += n * work[j - 1];
        ascending[round] = work[d - round];
    }
    std::vector<Int> out(ascending.rbegin(), ascending.rend());
    return from_coeffs(std::move(out));
}

Int IntPolynomial::eval(const Int& x) const {
    Int acc(0);
    for (const auto& c : coeffs_) acc = acc * x + c;
    return acc;
}

Rat IntPolynomial::eval(const Rat& x) const {
    Rat acc(0);
    for (const auto& c : coeffs_) acc = acc * x + c;
    return acc;
}

RationalInterval IntPolynomial::eval_on(const RationalInterval& x) const {
    RationalInterval acc = RationalInterval::point(Rat(0));
    for (const auto& c : coeffs_) {
        acc = acc * x;
        acc = acc + Rat(c);
    }
    return acc;
}

int IntPolynomial::sign_at(const Rat& x) const {
    if (is_zero()) return 0;
    // sum c_i p^i q^(d-i) with x = p/q, q > 0: same sign as f(x).
    const Int& p = x.get_num();
    const Int& q = x.get_den();
    Int acc(0);
    Int qpow(1);
    // Horner over the homogenized form, descending coefficients.
    for (const auto& c : coeffs_) {
        acc = acc * p + c * qpow;
        qpow *= q;
    }
    // One extra power of q was accumulated; q > 0 so the sign is unaffected.
    return sign_of(acc);
}

Int IntPolynomial::content() const {
    Int g(0);
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (is_zero()) return {};
    Int g = content();
    IntPolynomial p(*this);
    if (g > 1)
        for (auto& c : p.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return p;
}

std::pair<IntPolynomial, IntPolynomial> IntPolynomial::divmod_monic(const IntPolynomial& divisor) const {
    if (!divisor.is_monic()) throw NotMonic("divmod_monic requires a monic divisor");
    long dd = divisor.degree();
    if (degree() < dd) return {IntPolynomial{}, *this};
    std::vector<Int> rem = coeffs_;
    std::vector<Int> quot(static_cast<std::size_t>(degree() - dd) + 1, Int(0));
    for (std::size_t i = 0; i < quot.size(); ++i) {
        Int q = rem[i];
        quot[i] = q;
        if (q == 0) continue;
        for (long j = 0; j <= dd; ++j) rem[i + static_cast<std::size_t>(j)] -= q * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
    std::vector<Int> tail(rem.end() - dd, rem.end());
    return {from_coeffs(std::move(quot)), from_coeffs(std::move(tail))};
}

bool IntPolynomial::try_divide(const IntPolynomial& divisor, IntPolynomial* q) const {
    if (divisor.is_zero()) return false;
    if (is_zero()) {
        if (q) *q = IntPolynomial{};
        return true;
    }
    if (degree() < divisor.degree()) return false;
    std::vector<Int> rem = coeffs_;
    long dd = divisor.degree();
    const Int& lead = divisor.coeffs_[0];
    std::vector<Int> quot(static_cast<std::size_t>(degree() - dd) + 1, Int(0));
    for (std::size_t i = 0; i < quot.size(); ++i) {
        if (rem[i] == 0) continue;
        Int qc, r;
        mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), rem[i].get_mpz_t(), lead.get_mpz_t());
        if (r != 0) return false;
        quot[i] = qc;
        for (long j = 0; j <= dd; ++j) rem[i + static_cast<std::size_t>(j)] -= qc * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
    for (const auto& c : rem)
        if (c != 0) return false;
    if (q) *q = from_coeffs(std::move(quot));
    return true;
}

// ---------------------------------------------------------------------------
// parsing / printing

namespace {

bool is_integer_token(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

std::string strip_ws(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
    return out;
}

IntPolynomial parse_coeff_list(const std::string& text) {
    std::vector<Int> coeffs;
    std::string token;
    std::stringstream ss(text);
    while (std::getline(ss, token, ',')) {
        token = strip_ws(token);
        if (!is_integer_token(token)) throw ParseError("bad coefficient '" + token + "'");
        coeffs.emplace_back(token, 10);
    }
    if (!text.empty() && text.back() == ',') throw ParseError("trailing comma");
    if (coeffs.empty()) throw ParseError("no coefficients");
    return IntPolynomial::from_coeffs(std::move(coeffs));
}

IntPolynomial parse_sparse(const std::string& raw) {
    const std::string s = strip_ws(raw);
    if (s.empty()) throw EmptyInput();
    std::map<std::size_t, Int> terms;
    char var = 0;
    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = (s[i] == '-') ? -1 : 1;
            ++i;
            // allow runs like "- -" to fail naturally below
        }
        if (i >= s.size()) throw ParseError("dangling sign");
        std::string digits;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits.push_back(s[i++]);
        Int coeff = digits.empty() ? Int(1) : Int(digits, 10);
        if (sign < 0) coeff = -coeff;
        bool has_var = false;
        std::size_t power = 0;
        if (i < s.size() && s[i] == '*') {
            if (digits.empty()) throw ParseError("'*' without coefficient");
            ++i;
            if (i >= s.size() || !std::isalpha(static_cast<unsigned char>(s[i]))) throw ParseError("'*' not followed by a variable");
        }
        if (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
            char v = s[i++];
            if (var == 0) var = v;
            if (v != var) throw ParseError(std::string("mixed variables '") + var + "' and '" + v + "'");
            has_var = true;
            power = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string exp;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) exp.push_back(s[i++]);
                if (exp.empty()) throw ParseError("'^' without exponent");
                unsigned long e = std::stoul(exp);
                power = static_cast<std::size_t>(e);
            }
        }
        if (digits.empty() && !has_var) throw ParseError(std::string("unexpected character '") + s[i] + "'");
        terms[power] += coeff;
        if (i < s.size() && s[i] != '+' && s[i] != '-') throw ParseError(std::string("unexpected character '") + s[i] + "'");
    }
    std::size_t deg = 0;
    for (const auto& [p, c] : terms)
        if (c != 0) deg = std::max(deg, p);
    std::vector<Int> coeffs(deg + 1, Int(0));
    for (const auto& [p, c] : terms)
        if (p <= deg) coeffs[deg - p] += c;
    return IntPolynomial::from_coeffs(std::move(coeffs));
}

}  // namespace

IntPolynomial IntPolynomial::parse(const std::string& text) {
    std::string stripped = strip_ws(text);
    if (stripped.empty()) throw EmptyInput();
    if (stripped.find(',') != std::string::npos) return parse_coeff_list(stripped);
    return parse_sparse(stripped);
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    long d = degree();
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Int& c = coeffs_[i];
        if (c == 0) continue;
        long p = d - static_cast<long>(i);
        Int a = c;
        if (first) {
            if (sign_of(a) < 0) {
                out += "-";
                a = -a;
            }
            first = false;
        } else {
            out += (sign_of(a) < 0) ? " - " : " + ";
            if (sign_of(a) < 0) a = -a;
        }
        if (p == 0) {
            out += a.get_str();
        } else {
            if (a != 1) out += a.get_str();
            out += "x";
            if (p != 1) out += "^" + std::to_string(p);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// pseudo-division, gcd, resultant

IntPolynomial pseudo_rem_abs(const IntPolynomial& A, const IntPolynomial& B) {
    if (B.is_zero()) throw ZeroPolynomial("pseudo-remainder by zero");
    long m = A.degree(), n = B.degree();
    if (m < n) throw PreconditionError("BadPseudoDivision", "deg A < deg B");
    std::vector<Int> rem = A.coeffs();
    const std::vector<Int>& div = B.coeffs();
    const Int& lead = div[0];
    long steps = m - n + 1;
    for (long k = 0; k < steps; ++k) {
        // rem <- lc(B) * rem - rem[k] * x^(shift) * B; keeps everything integral.
        Int top = rem[static_cast<std::size_t>(k)];
        for (std::size_t i = static_cast<std::size_t>(k) + 1; i < rem.size(); ++i) rem[i] *= lead;
        rem[static_cast<std::size_t>(k)] = 0;
        for (long j = 1; j <= n; ++j)
            rem[static_cast<std::size_t>(k + j)] -= top * div[static_cast<std::size_t>(j)];
    }
    std::vector<Int> tail(rem.end() - n, rem.end());
    IntPolynomial R = IntPolynomial::from_coeffs(std::move(tail));
    // The implied multiplier is lc(B)^steps; flip when it is negative so the
    // effective scaling is positive (sign-faithful for Sturm chains).
    if (sign_of(lead) < 0 && (steps % 2) != 0) return -R;
    return R;
}

IntPolynomial gcd_z(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() && b.is_zero()) return {};
    Int ca = a.content(), cb = b.content();
    Int cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    if (a.is_zero() || b.is_zero()) {
        IntPolynomial p = (a.is_zero() ? b : a).primitive_part();
        if (sign_of(p.leading()) < 0) p = -p;
        return p * cg;
    }
    IntPolynomial u = a.primitive_part();
    IntPolynomial v = b.primitive_part();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero() && v.degree() >= 1) {
        IntPolynomial r = pseudo_rem_abs(u, v).primitive_part();
        u = std::move(v);
        v = std::move(r);
    }
    IntPolynomial g = v.is_zero() ? u : IntPolynomial::constant(Int(1));
    if (sign_of(g.leading()) < 0) g = -g;
    return g * cg;
}

IntPolynomial squarefree_part(const IntPolynomial& f) {
    if (f.is_zero()) throw ZeroPolynomial("squarefree part of zero");
    if (f.degree() == 0) return IntPolynomial::constant(Int(1));
    IntPolynomial p = f.primitive_part();
    if (sign_of(p.leading()) < 0) p = -p;
    IntPolynomial g = gcd_z(p, p.derivative());
    if (g.degree() == 0) return p;
    IntPolynomial q;
    // Gauss: the primitive part divides exactly.
    if (!p.try_divide(g.primitive_part(), &q)) throw Error("Internal", "squarefree division failed");
    q = q.primitive_part();
    if (sign_of(q.leading()) < 0) q = -q;
    return q;
}

bool is_squarefree(const IntPolynomial& f) {
    if (f.is_zero()) return false;
    if (f.degree() == 0) return true;
    return gcd_z(f, f.derivative()).degree() == 0;
}

Int resultant(const IntPolynomial& f, const IntPolynomial& g) {
    if (f.is_zero() || g.is_zero()) throw ZeroPolynomial("resultant with a zero polynomial");
    // Euclidean PRS with exact power bookkeeping:
    //   Res(A,B) = (-1)^(mn) lc(B)^(m - deg R - (m-n+1)n) Res(B, R),
    // where R is the pseudo-remainder of A by B (positive multiplier), and
    // content stripped from R contributes content^(deg B).
    IntPolynomial A = f, B = g;
    Rat acc(1);
    if (A.degree() < B.degree()) {
        if ((A.degree() % 2) != 0 && (B.degree() % 2) != 0) acc = -acc;
        std::swap(A, B);
    }
    while (true) {
        long m = A.degree(), n = B.degree();
        if (n == 0) {
            acc *= pow_rat(Rat(B.leading()), m);
            break;
        }
        IntPolynomial R = pseudo_rem_abs(A, B);
        // pseudo_rem_abs may have flipped R; the flip multiplies Res(B, R) by
        // (-1)^deg B when |lc|^(m-n+1) was used instead of lc^(m-n+1).
        bool flipped = sign_of(B.leading()) < 0 && ((m - n + 1) % 2) != 0;
        if (R.is_zero()) return Int(0);
        long r = R.degree();
        if ((m % 2) != 0 && (n % 2) != 0) acc = -acc;
        acc *= pow_rat(Rat(B.leading()), m - r - (m - n + 1) * n);
        if (flipped && (n % 2) != 0) acc = -acc;
        Int c = R.content();
        if (c > 1) {
            acc *= pow_rat(Rat(c), n);
            R = R.primitive_part();
        }
        A = std::move(B);
        B = std::move(R);
    }
    if (acc.get_den() != 1) throw Error("Internal", "resultant bookkeeping produced a non-integer");
    return acc.get_num();
}

Int discriminant(const IntPolynomial& f) {
    if (f.is_zero() || f.degree() < 1) throw DegreeTooSmall("discriminant needs degree >= 1");
    long d = f.degree();
    if (d == 1) return Int(1);
    Int res = resultant(f, f.derivative());
    Int num = ((d * (d - 1) / 2) % 2 != 0) ? Int(-res) : res;
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), f.leading().get_mpz_t());
    if (r != 0) throw Error("Internal", "discriminant division not exact");
    return q;
}

// ---------------------------------------------------------------------------
// irreducibility

namespace {

std::vector<Int> positive_divisors(const Int& n) {
    Int a = abs(n);
    std::vector<Int> divs;
    for (Int i(1); i * i <= a; ++i) {
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), i.get_mpz_t());
        if (r == 0) {
            divs.push_back(i);
            if (q != i) divs.push_back(q);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

bool has_rational_root(const IntPolynomial& f) {
    // Candidates p/q with p | trailing coefficient, q | leading coefficient.
    const Int trailing = f.coeff(0);
    if (trailing == 0) return true;  // x divides
    std::vector<Int> ps = positive_divisors(trailing);
    std::vector<Int> qs = positive_divisors(f.leading());
    for (const Int& q : qs)
        for (const Int& p : ps) {
            Rat cand = rat(p, q);
            if (f.sign_at(cand) == 0) return true;
            cand = rat(-p, q);
            if (f.sign_at(cand) == 0) return true;
        }
    return false;
}

/// Landau-Mignotte style coefficient cap for a degree-k divisor: 2^k * ||f||_2.
Int factor_coeff_bound(const IntPolynomial& f, long k) {
    Int sum(0);
    for (const auto& c : f.coeffs()) sum += c * c;
    Int root = isqrt(sum);
    if (root * root < sum) ++root;
    Int bound;
    mpz_mul_2exp(bound.get_mpz_t(), root.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
    return bound;
}

/// Exhaustive search for a degree-k factor (2 <= k <= deg f / 2). The
/// polynomial is primitive with no rational roots at this point, so leading
/// and trailing coefficients of any factor divide lc(f) and f(0).
bool has_factor_of_degree(const IntPolynomial& f, long k) {
    const Int bound = factor_coeff_bound(f, k);
    std::vector<Int> leads = positive_divisors(f.leading());
    std::vector<Int> tails = positive_divisors(f.coeff(0));
    const Int f_at_1 = f.eval(Int(1));
    const Int f_at_m1 = f.eval(Int(-1));

    std::vector<Int> mid(static_cast<std::size_t>(k) - 1, -bound);
    for (const Int& lead : leads) {
        for (const Int& tail_abs : tails) {
            for (int tail_sign = +1; tail_sign >= -1; tail_sign -= 2) {
                Int tail = tail_abs * tail_sign;
                // Odometer over the middle coefficients.
                std::fill(mid.begin(), mid.end(), -bound);
                while (true) {
                    std::vector<Int> cand;
                    cand.reserve(static_cast<std::size_t>(k) + 1);
                    cand.push_back(lead);
                    for (const auto& c : mid) cand.push_back(c);
                    cand.push_back(tail);
                    IntPolynomial g = IntPolynomial::from_coeffs(cand);
                    if (g.degree() == k) {
                        Int g1 = g.eval(Int(1));
                        Int gm1 = g.eval(Int(-1));
                        bool ok = g1 != 0 && gm1 != 0;
                        if (ok) {
                            Int r;
                            mpz_tdiv_r(r.get_mpz_t(), f_at_1.get_mpz_t(), g1.get_mpz_t());
                            ok = (r == 0);
                        }
                        if (ok) {
                            Int r;
                            mpz_tdiv_r(r.get_mpz_t(), f_at_m1.get_mpz_t(), gm1.get_mpz_t());
                            ok = (r == 0);
                        }
                        if (ok && f.try_divide(g)) return true;
                    }
                    // advance odometer
                    std::size_t pos = 0;
                    while (pos < mid.size()) {
                        if (mid[pos] < bound) {
                            ++mid[pos];
                            break;
                        }
                        mid[pos] = -bound;
                        ++pos;
                    }
                    if (pos == mid.size()) break;
                }
            }
        }
    }
    return false;
}

}  // namespace

bool is_irreducible(const IntPolynomial& f, long degree_cap) {
    if (f.is_zero()) throw ZeroPolynomial("irreducibility of zero");
    long d = f.degree();
    if (d == 0) return false;
    if (d > degree_cap)
        throw DegreeCapExceeded("degree " + std::to_string(d) + " exceeds cap " + std::to_string(degree_cap));
    if (d == 1) return true;
    IntPolynomial p = f.primitive_part();
    if (p.coeff(0) == 0) return false;  // x divides
    if (has_rational_root(p)) return false;
    for (long k = 2; 2 * k <= d; ++k)
        if (has_factor_of_degree(p, k)) return false;
    return true;
}

}  // namespace interlace
