#include <brylinski/errors.hpp>
#include <brylinski/polynomial.hpp>

#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

namespace brylinski {

std::string symbol_name(int index)
{
    if (index < 0 || index >= symbol_count) throw Error(ErrorCode::usage, "symbol index out of range");
    if (index < 7) return "a" + std::to_string(index + 2);
    if (index < 14) return "b" + std::to_string(index - 5);
    if (index < 18) return "k" + std::to_string(index - 14);
    return "t" + std::to_string(index - 18);
}

int symbol_index(std::string_view name)
{
    auto digit_suffix = [&](std::string_view prefix, int lo, int hi) -> int {
        if (name.size() != prefix.size() + 1 || name.substr(0, prefix.size()) != prefix) return -1;
        const int d = name.back() - '0';
        return d >= lo && d <= hi ? d : -1;
    };
    if (int i = digit_suffix("a", 2, 8); i >= 0) return symbol_a(i);
    if (int i = digit_suffix("b", 2, 8); i >= 0) return symbol_b(i);
    for (std::string_view p : {"k", "kappa"})
        if (int n = digit_suffix(p, 0, 3); n >= 0) return symbol_kappa(n);
    for (std::string_view p : {"t", "tau"})
        if (int n = digit_suffix(p, 0, 3); n >= 0) return symbol_tau(n);
    throw Error(ErrorCode::usage, "unknown symbol '" + std::string(name) + "'");
}

int symbol_weight(int index)
{
    if (index < 0 || index >= symbol_count) throw Error(ErrorCode::usage, "symbol index out of range");
    if (index < 7) return index + 1;       // a_i: i - 1
    if (index < 14) return index - 6;      // b_i: i - 1
    if (index < 18) return index - 13;     // kappa_n: n + 1
    return index - 17;                     // tau_n: n + 1
}

Polynomial Polynomial::constant(double c)
{
    Polynomial p;
    if (c != 0.0) p.terms_[Exponents{}] = c;
    return p;
}

Polynomial Polynomial::symbol(int index)
{
    Polynomial p;
    Exponents e{};
    e.at(static_cast<std::size_t>(index)) = 1;
    p.terms_[e] = 1.0;
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    for (const auto& [e, c] : o.terms_) {
        const double v = (terms_[e] += c);
        if (v == 0.0) terms_.erase(e);
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    for (const auto& [e, c] : o.terms_) {
        const double v = (terms_[e] -= c);
        if (v == 0.0) terms_.erase(e);
    }
    return *this;
}

Polynomial& Polynomial::operator*=(double c)
{
    if (c == 0.0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    Polynomial out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e;
            for (int i = 0; i < symbol_count; ++i) e[i] = ea[i] + eb[i];
            const double v = (out.terms_[e] += ca * cb);
            if (v == 0.0) out.terms_.erase(e);
        }
    }
    return out;
}

Polynomial Polynomial::pow(int n) const
{
    if (n < 0) throw Error(ErrorCode::usage, "negative polynomial power");
    Polynomial out = constant(1.0);
    for (int i = 0; i < n; ++i) out = out * *this;
    return out;
}

bool Polynomial::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
}

double Polynomial::constant_value() const
{
    const auto it = terms_.find(Exponents{});
    return it == terms_.end() ? 0.0 : it->second;
}

std::vector<Term> Polynomial::terms() const
{
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.push_back({c, e});
    return out;
}

double Polynomial::evaluate(std::span<const double, symbol_count> values) const
{
    double acc = 0.0;
    for (const auto& [e, c] : terms_) {
        double m = c;
        for (int i = 0; i < symbol_count; ++i) {
            for (int k = 0; k < e[i]; ++k) m *= values[i];
        }
        acc += m;
    }
    return acc;
}

namespace {

std::string monomial_text(const Exponents& e)
{
    std::string out;
    for (int i = 0; i < symbol_count; ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += symbol_name(i);
        if (e[i] > 1) out += '^' + std::to_string(e[i]);
    }
    return out.empty() ? "1" : out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Polynomial parse()
    {
        Polynomial p = expr();
        skip();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw Error(ErrorCode::parse, "formula parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c)
    {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expr()
    {
        Polynomial acc = term();
        for (;;) {
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else return acc;
        }
    }

    Polynomial term()
    {
        Polynomial acc = unary();
        for (;;) {
            if (accept('*')) {
                acc = acc * unary();
            } else if (accept('/')) {
                const Polynomial d = unary();
                if (!d.is_constant()) fail("division by a non-constant expression");
                if (d.constant_value() == 0.0) fail("division by zero");
                acc *= 1.0 / d.constant_value();
            } else {
                return acc;
            }
        }
    }

    Polynomial unary()
    {
        if (accept('-')) return unary() * -1.0;
        if (accept('+')) return unary();
        return power();
    }

    Polynomial power()
    {
        Polynomial base = primary();
        if (accept('^')) {
            skip();
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("exponent must be a non-negative integer literal");
            int n = 0;
            std::from_chars(text_.data() + start, text_.data() + pos_, n);
            return base.pow(n);
        }
        return base;
    }

    Polynomial primary()
    {
        skip();
        if (pos_ >= text_.size()) fail("unexpected end of formula");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!accept(')')) fail("missing ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
                ++pos_;
            double v = 0.0;
            const auto res = std::from_chars(text_.data() + start, text_.data() + pos_, v);
            if (res.ec != std::errc{} || res.ptr != text_.data() + pos_) fail("malformed number");
            return Polynomial::constant(v);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return Polynomial::symbol(symbol_index(text_.substr(start, pos_ - start)));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

std::string Polynomial::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream out;
    out.precision(17);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        out << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        out << std::abs(c) << '*' << monomial_text(e);
        first = false;
    }
    return out.str();
}

Polynomial parse_polynomial(std::string_view text) { return Parser(text).parse(); }

int weight_of(const Exponents& exps)
{
    int w = 0;
    for (int i = 0; i < symbol_count; ++i) w += exps[i] * symbol_weight(i);
    return w;
}

int weight_of(std::string_view monomial)
{
    const Polynomial p = parse_polynomial(monomial);
    if (p.size() != 1) throw Error(ErrorCode::usage, "weight_of expects a single monomial");
    return weight_of(p.terms().front().exps);
}

WeightAudit weight_audit(const Polynomial& p, int expected_weight)
{
    WeightAudit audit;
    for (const Term& t : p.terms()) {
        if (weight_of(t.exps) != expected_weight) {
            audit.pass = false;
            audit.offending.push_back(monomial_text(t.exps));
        }
    }
    return audit;
}

WeightAudit weight_audit(std::string_view expression, int expected_weight)
{
    return weight_audit(parse_polynomial(expression), expected_weight);
}

} // namespace brylinski
