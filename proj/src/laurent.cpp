#include "hadlab/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace hadlab {

namespace {

Rational rational_pow(const Rational& base, std::int32_t e) {
    if (e < 0) {
        if (base == 0) throw std::invalid_argument("zero base with negative exponent");
        return rational_pow(Rational(1) / base, -e);
    }
    Rational out = 1;
    for (std::int32_t k = 0; k < e; ++k) out *= base;
    return out;
}

std::complex<double> complex_pow(std::complex<double> base, std::int32_t e) {
    if (e < 0) {
        base = 1.0 / base;
        e = -e;
    }
    std::complex<double> out = 1.0;
    for (std::int32_t k = 0; k < e; ++k) out *= base;
    return out;
}

std::int32_t checked_exp_sum(std::int32_t a, std::int32_t b) {
    const std::int64_t s = static_cast<std::int64_t>(a) + b;
    if (s < std::numeric_limits<std::int32_t>::min() ||
        s > std::numeric_limits<std::int32_t>::max())
        throw std::overflow_error("Laurent exponent overflow");
    return static_cast<std::int32_t>(s);
}

std::string coeff_str(const Rational& c) {
    if (denominator(c) == 1) return numerator(c).str();
    return numerator(c).str() + "/" + denominator(c).str();
}

} // namespace

LaurentPoly::LaurentPoly(Rational constant) {
    if (constant != 0) terms_.emplace(std::vector<std::int32_t>{}, std::move(constant));
}

LaurentPoly LaurentPoly::variable(const std::string& name, std::int32_t exponent) {
    if (name.empty()) throw std::invalid_argument("empty variable name");
    LaurentPoly p;
    if (exponent == 0) return LaurentPoly(Rational(1));
    p.vars_ = {name};
    p.terms_.emplace(std::vector<std::int32_t>{exponent}, Rational(1));
    return p;
}

void LaurentPoly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = (it->second == 0) ? terms_.erase(it) : std::next(it);
    if (terms_.empty()) {
        vars_.clear();
        return;
    }
    std::vector<bool> live(vars_.size(), false);
    for (const auto& [exps, coeff] : terms_)
        for (std::size_t v = 0; v < vars_.size(); ++v)
            if (exps[v] != 0) live[v] = true;
    if (std::all_of(live.begin(), live.end(), [](bool b) { return b; })) return;
    std::vector<std::string> new_vars;
    for (std::size_t v = 0; v < vars_.size(); ++v)
        if (live[v]) new_vars.push_back(vars_[v]);
    std::map<std::vector<std::int32_t>, Rational> new_terms;
    for (const auto& [exps, coeff] : terms_) {
        std::vector<std::int32_t> ne;
        ne.reserve(new_vars.size());
        for (std::size_t v = 0; v < vars_.size(); ++v)
            if (live[v]) ne.push_back(exps[v]);
        new_terms.emplace(std::move(ne), coeff);
    }
    vars_ = std::move(new_vars);
    terms_ = std::move(new_terms);
}

LaurentPoly LaurentPoly::remapped_to(const std::vector<std::string>& target_vars) const {
    std::vector<std::size_t> pos(vars_.size());
    for (std::size_t v = 0; v < vars_.size(); ++v) {
        const auto it = std::lower_bound(target_vars.begin(), target_vars.end(), vars_[v]);
        pos[v] = static_cast<std::size_t>(it - target_vars.begin());
    }
    LaurentPoly out;
    out.vars_ = target_vars;
    for (const auto& [exps, coeff] : terms_) {
        std::vector<std::int32_t> ne(target_vars.size(), 0);
        for (std::size_t v = 0; v < vars_.size(); ++v) ne[pos[v]] = exps[v];
        out.terms_.emplace(std::move(ne), coeff);
    }
    return out;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    std::vector<std::string> merged;
    std::set_union(vars_.begin(), vars_.end(), o.vars_.begin(), o.vars_.end(),
                   std::back_inserter(merged));
    LaurentPoly a = remapped_to(merged);
    const LaurentPoly b = o.remapped_to(merged);
    for (const auto& [exps, coeff] : b.terms_) {
        auto [it, inserted] = a.terms_.emplace(exps, coeff);
        if (!inserted) it->second += coeff;
    }
    a.prune();
    return a;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out = *this;
    for (auto& [exps, coeff] : out.terms_) coeff = -coeff;
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    std::vector<std::string> merged;
    std::set_union(vars_.begin(), vars_.end(), o.vars_.begin(), o.vars_.end(),
                   std::back_inserter(merged));
    const LaurentPoly a = remapped_to(merged);
    const LaurentPoly b = o.remapped_to(merged);
    LaurentPoly out;
    out.vars_ = merged;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            std::vector<std::int32_t> e(merged.size());
            for (std::size_t v = 0; v < merged.size(); ++v)
                e[v] = checked_exp_sum(ea[v], eb[v]);
            auto [it, inserted] = out.terms_.emplace(std::move(e), ca * cb);
            if (!inserted) it->second += ca * cb;
        }
    out.prune();
    return out;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
}

LaurentPoly LaurentPoly::pow(std::int32_t exponent) const {
    if (exponent == 0) return LaurentPoly(Rational(1));
    if (exponent < 0) {
        if (terms_.size() != 1)
            throw std::invalid_argument("negative power of a non-monomial");
        const auto& [exps, coeff] = *terms_.begin();
        LaurentPoly inv;
        inv.vars_ = vars_;
        std::vector<std::int32_t> ne(exps.size());
        for (std::size_t v = 0; v < exps.size(); ++v) {
            if (exps[v] == std::numeric_limits<std::int32_t>::min())
                throw std::overflow_error("Laurent exponent overflow");
            ne[v] = -exps[v];
        }
        inv.terms_.emplace(std::move(ne), rational_pow(coeff, -1));
        return inv.pow(-exponent);
    }
    LaurentPoly out(Rational(1));
    LaurentPoly base = *this;
    std::int32_t e = exponent;
    while (e > 0) {
        if (e & 1) out = out * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return out;
}

LaurentPoly LaurentPoly::substitute(const std::string& var, const LaurentPoly& monomial) const {
    if (!monomial.is_monomial() && !monomial.is_zero())
        throw std::invalid_argument("substitute requires a one-term replacement");
    const auto vit = std::lower_bound(vars_.begin(), vars_.end(), var);
    if (vit == vars_.end() || *vit != var) return *this;
    const std::size_t vi = static_cast<std::size_t>(vit - vars_.begin());
    LaurentPoly out;
    for (const auto& [exps, coeff] : terms_) {
        LaurentPoly term(coeff);
        for (std::size_t v = 0; v < vars_.size(); ++v) {
            if (exps[v] == 0) continue;
            term = term * (v == vi ? monomial.pow(exps[v])
                                   : LaurentPoly::variable(vars_[v], exps[v]));
        }
        out = out + term;
    }
    return out;
}

Rational LaurentPoly::eval(const std::map<std::string, Rational>& assignment) const {
    std::vector<Rational> vals;
    vals.reserve(vars_.size());
    for (const auto& v : vars_) {
        const auto it = assignment.find(v);
        if (it == assignment.end())
            throw std::invalid_argument("eval missing assignment for variable " + v);
        vals.push_back(it->second);
    }
    Rational total = 0;
    for (const auto& [exps, coeff] : terms_) {
        Rational t = coeff;
        for (std::size_t v = 0; v < vars_.size(); ++v)
            if (exps[v] != 0) t *= rational_pow(vals[v], exps[v]);
        total += t;
    }
    return total;
}

std::complex<double> LaurentPoly::eval_complex(
    const std::map<std::string, std::complex<double>>& assignment) const {
    std::vector<std::complex<double>> vals;
    vals.reserve(vars_.size());
    for (const auto& v : vars_) {
        const auto it = assignment.find(v);
        if (it == assignment.end())
            throw std::invalid_argument("eval missing assignment for variable " + v);
        vals.push_back(it->second);
    }
    std::complex<double> total = 0.0;
    for (const auto& [exps, coeff] : terms_) {
        std::complex<double> t = coeff.convert_to<double>();
        for (std::size_t v = 0; v < vars_.size(); ++v)
            if (exps[v] != 0) t *= complex_pow(vals[v], exps[v]);
        total += t;
    }
    return total;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [exps, coeff] : terms_) {
        const bool neg = coeff < 0;
        const Rational mag = neg ? Rational(-coeff) : coeff;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string body;
        for (std::size_t v = 0; v < vars_.size(); ++v) {
            if (exps[v] == 0) continue;
            if (!body.empty()) body += "*";
            body += vars_[v];
            if (exps[v] != 1) body += "^" + std::to_string(exps[v]);
        }
        if (body.empty())
            out += coeff_str(mag);
        else if (mag == 1)
            out += body;
        else
            out += coeff_str(mag) + "*" + body;
    }
    return out;
}

// ---------------------------------------------------------------------------

class PolyParser {
public:
    explicit PolyParser(const std::string& text) : s_(text) {}

    LaurentPoly run() {
        LaurentPoly p = parse_expr();
        skip_ws();
        if (pos_ != s_.size()) throw PolyParseError("trailing input", pos_);
        return p;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    LaurentPoly parse_expr() {
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        LaurentPoly acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            if (eat('+'))
                acc = acc + parse_term();
            else if (eat('-'))
                acc = acc - parse_term();
            else
                break;
        }
        return acc;
    }

    LaurentPoly parse_term() {
        LaurentPoly acc = parse_factor();
        while (eat('*')) acc = acc * parse_factor();
        return acc;
    }

    LaurentPoly parse_factor() {
        const std::size_t base_pos = pos_;
        LaurentPoly base = parse_base();
        if (!eat('^')) return base;
        skip_ws();
        bool neg = eat('-');
        skip_ws();
        const std::size_t exp_pos = pos_;
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            throw PolyParseError("expected integer exponent", exp_pos);
        long long e = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            e = e * 10 + (s_[pos_] - '0');
            if (e > 1000000) throw PolyParseError("exponent too large", exp_pos);
            ++pos_;
        }
        const std::int32_t exp = static_cast<std::int32_t>(neg ? -e : e);
        if (exp < 0 && !base.is_monomial())
            throw PolyParseError("negative exponent requires a one-term base", base_pos);
        return base.pow(exp);
    }

    LaurentPoly parse_base() {
        skip_ws();
        if (pos_ >= s_.size()) throw PolyParseError("unexpected end of input", pos_);
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            LaurentPoly inner = parse_expr();
            if (!eat(')')) throw PolyParseError("expected ')'", pos_);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                digits += s_[pos_++];
            return LaurentPoly(Rational(boost::multiprecision::cpp_int(digits)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                name += s_[pos_++];
            return LaurentPoly::variable(name);
        }
        throw PolyParseError(std::string("unexpected character '") + c + "'", pos_);
    }
};

LaurentPoly LaurentPoly::parse(const std::string& text) { return PolyParser(text).run(); }

} // namespace hadlab
