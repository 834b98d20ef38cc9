#include "threefold/germ.hpp"

#include <cctype>
#include <sstream>

#include "threefold/contrib.hpp"

namespace threefold {

long long weight_class(const QuotientGerm& germ, const Polynomial& eq) {
    if (eq.is_zero()) throw std::domain_error("weight_class: zero equation");
    long long cls = -1;
    for (const auto& t : eq.terms()) {
        long long w = 0;
        for (int k = 0; k < germ.dim; ++k)
            w = residue(w + t.exp[k] * germ.action[k], germ.n);
        if (cls < 0) {
            cls = w;
        } else if (w != cls) {
            Polynomial m = monomial(germ.dim, t.exp);
            throw std::domain_error("equation is not semi-invariant: monomial " + m.str()
                                    + " has weight " + std::to_string(w) + " mod "
                                    + std::to_string(germ.n) + ", expected "
                                    + std::to_string(cls));
        }
    }
    return cls;
}

void validate_germ(const QuotientGerm& germ) {
    if (germ.dim != 4 && germ.dim != 5)
        throw std::domain_error("germ: dimension must be 4 or 5");
    if (germ.n < 1) throw std::domain_error("germ: group order must be positive");
    size_t expected = static_cast<size_t>(germ.dim - 3);
    if (germ.equations.size() != expected)
        throw std::domain_error("germ: a " + std::to_string(germ.dim)
                                + "-variable germ needs " + std::to_string(expected)
                                + " equation(s)");
    for (const auto& eq : germ.equations) {
        if (eq.nvars() != germ.dim)
            throw std::domain_error("germ: equation variable count mismatch");
        for (const auto& t : eq.terms())
            for (int k = germ.dim; k < kMaxVars; ++k)
                if (t.exp[k] != 0)
                    throw std::domain_error("germ: equation uses an out-of-range variable");
        (void)weight_class(germ, eq);
    }
}

namespace {

class Scanner {
public:
    explicit Scanner(const std::string& text) : s_(text) {}

    void skip_space() {
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c == '#') {
                while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
            } else if (c == '\n') {
                ++line_;
                col_ = 1;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++col_;
                ++pos_;
            } else {
                break;
            }
        }
    }

    bool eof() {
        skip_space();
        return pos_ >= s_.size();
    }

    char peek() {
        skip_space();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    void expect(char c) {
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        advance();
    }

    bool accept(char c) {
        if (peek() == c) {
            advance();
            return true;
        }
        return false;
    }

    long long integer() {
        skip_space();
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            neg = (s_[pos_] == '-');
            advance();
        }
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected an integer");
        long long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            advance();
        }
        return neg ? -v : v;
    }

    std::string word() {
        skip_space();
        std::string w;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
            w.push_back(s_[pos_]);
            advance();
        }
        if (w.empty()) fail("expected a keyword");
        return w;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg + " at line " + std::to_string(line_) + ", column "
                             + std::to_string(col_),
                         line_, col_);
    }

    int line() const { return line_; }
    int column() const { return col_; }

private:
    void advance() {
        if (pos_ < s_.size()) {
            if (s_[pos_] == '\n') { ++line_; col_ = 1; } else { ++col_; }
            ++pos_;
        }
    }

    const std::string& s_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

// factor := rational | x<k> ['^' int];  returns false when the next token
// opens no factor
bool parse_factor(Scanner& sc, int dim, Exponents& exp, Rational& coeff) {
    char c = sc.peek();
    if (c == 'x') {
        sc.expect('x');
        long long idx = sc.integer();
        if (idx < 1 || idx > dim) sc.fail("variable index out of range");
        long long e = 1;
        if (sc.accept('^')) {
            e = sc.integer();
            if (e < 0) sc.fail("negative exponents are not allowed");
        }
        exp[idx - 1] += e;
        return true;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
        long long num = sc.integer();
        if (sc.accept('/')) {
            long long den = sc.integer();
            if (den == 0) sc.fail("zero denominator");
            coeff *= Rational(num, den);
        } else {
            coeff *= Rational(num);
        }
        return true;
    }
    return false;
}

Polynomial parse_poly(Scanner& sc, int dim) {
    Polynomial p(dim);
    bool first = true;
    while (true) {
        int sign = 1;
        if (sc.accept('+')) {
        } else if (sc.accept('-')) {
            sign = -1;
        } else if (!first) {
            break;
        }
        first = false;
        Exponents exp{};
        Rational coeff(sign);
        if (!parse_factor(sc, dim, exp, coeff)) sc.fail("expected a monomial");
        while (sc.accept('*')) {
            if (!parse_factor(sc, dim, exp, coeff)) sc.fail("expected a factor after '*'");
        }
        p.add_term(exp, coeff);
    }
    return p;
}

}  // namespace

QuotientGerm parse_germ(const std::string& text) {
    Scanner sc(text);
    QuotientGerm germ;

    if (sc.word() != "quotient") sc.fail("expected 'quotient'");
    long long one = sc.integer();
    if (one != 1) sc.fail("quotient must be written 1/n(...)");
    sc.expect('/');
    germ.n = sc.integer();
    if (germ.n < 1) sc.fail("group order must be positive");
    sc.expect('(');
    std::vector<long long> action;
    action.push_back(residue(sc.integer(), germ.n));
    while (sc.accept(',')) action.push_back(residue(sc.integer(), germ.n));
    sc.expect(')');
    sc.expect(';');
    if (action.size() != 4 && action.size() != 5)
        sc.fail("the action must list 4 or 5 weights");
    germ.dim = static_cast<int>(action.size());
    for (size_t k = 0; k < action.size(); ++k) germ.action[k] = action[k];

    while (!sc.eof()) {
        if (sc.word() != "eq") sc.fail("expected 'eq'");
        germ.equations.push_back(parse_poly(sc, germ.dim));
        sc.expect(';');
    }
    try {
        validate_germ(germ);
    } catch (const std::domain_error& e) {
        throw ParseError(e.what(), sc.line(), sc.column());
    }
    return germ;
}

std::string print_germ(const QuotientGerm& germ) {
    std::ostringstream os;
    os << "quotient 1/" << germ.n << "(";
    for (int k = 0; k < germ.dim; ++k) {
        if (k) os << ",";
        os << germ.action[k];
    }
    os << ");\n";
    for (const auto& eq : germ.equations) os << "eq " << eq.str() << ";\n";
    return os.str();
}

std::vector<Rational> parse_weight_list(const std::string& text) {
    std::vector<Rational> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) {
        size_t b = item.find_first_not_of(" \t");
        size_t e = item.find_last_not_of(" \t");
        if (b == std::string::npos) throw std::invalid_argument("empty weight");
        out.push_back(Rational::parse(item.substr(b, e - b + 1)));
    }
    if (out.empty()) throw std::invalid_argument("empty weight list");
    return out;
}

}  // namespace threefold
