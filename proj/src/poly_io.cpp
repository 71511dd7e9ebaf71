#include "tauforge/poly_io.hpp"

#include <cctype>

#include "tauforge/error.hpp"

namespace tauforge {

std::string var_name(VarId v, bool show_component) {
    std::string out(1, static_cast<char>(std::tolower(family_letter(v.family))));
    if (show_component) out += "[" + std::to_string(v.component) + "]";
    return out + std::to_string(v.index);
}

namespace {

std::string monomial_text(const Monomial& m, bool multi) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        VarId v = m.var(i);
        if (!out.empty()) out += '*';
        out += var_name(v, multi || v.component != 1);
        if (m.exponent(i) > 1) out += "^" + std::to_string(m.exponent(i));
    }
    return out;
}

} // namespace

std::string to_text(const Poly& p) {
    if (p.is_zero()) return "0";
    const bool multi = p.components() > 1;
    std::string out;
    const auto& terms = p.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        Rational c = it->coeff;
        bool negative = c.sign() < 0;
        if (negative) c = -c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        std::string mono = monomial_text(it->monomial, multi);
        if (mono.empty())
            out += c.to_string();
        else if (c.is_one())
            out += mono;
        else
            out += c.to_string() + "*" + mono;
    }
    return out;
}

namespace {

class TextParser {
public:
    explicit TextParser(std::string_view text) {
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
    }

    Poly parse() {
        if (s_.empty()) fail("empty polynomial");
        PolyBuilder acc;
        bool first = true;
        while (pos_ < s_.size() || first) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = get() == '-' ? -1 : 1;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            auto [m, c] = term();
            acc.add(m, sign < 0 ? -c : c);
            first = false;
        }
        return acc.build();
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
    [[noreturn]] void fail(const std::string& why) const {
        throw InvalidInput("malformed polynomial text at offset " + std::to_string(pos_) + ": " + why);
    }

    std::string digits() {
        std::string d;
        while (std::isdigit(static_cast<unsigned char>(peek()))) d += get();
        if (d.empty()) fail("expected digits");
        return d;
    }

    long small_int() {
        std::string d = digits();
        if (d.size() > 9) fail("integer too large");
        return std::stol(d);
    }

    std::pair<Monomial, Rational> term() {
        Monomial m;
        Rational c(1);
        do {
            char ch = peek();
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                std::string num = digits();
                if (peek() == '/') {
                    get();
                    num += "/" + digits();
                }
                c *= Rational::parse(num);
            } else if (ch == 't' || ch == 'y' || ch == 'x' || ch == 'T' || ch == 'Y' || ch == 'X') {
                Family f = family_from_letter(get());
                long a = 1;
                if (peek() == '[') {
                    get();
                    a = small_int();
                    if (get() != ']') fail("expected ']'");
                }
                long k = small_int();
                long e = 1;
                if (peek() == '^') {
                    get();
                    e = small_int();
                }
                m = m * Monomial::of(VarId(f, static_cast<int>(a), static_cast<int>(k)), static_cast<unsigned>(e));
            } else {
                fail("expected a rational or a variable");
            }
        } while (peek() == '*' && get());
        return {m, c};
    }

    std::string s_;
    std::size_t pos_ = 0;
};

} // namespace

Poly parse_poly_text(std::string_view text) { return TextParser(text).parse(); }

nlohmann::json to_json(const Poly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : p.terms()) {
        nlohmann::json mono = nlohmann::json::array();
        for (std::size_t i = 0; i < t.monomial.size(); ++i) {
            VarId v = t.monomial.var(i);
            mono.push_back({std::string(1, family_letter(v.family)), v.component, v.index, t.monomial.exponent(i)});
        }
        terms.push_back({{"coeff", t.coeff.to_fraction_string()}, {"monomial", std::move(mono)}});
    }
    nlohmann::json out = {{"terms", std::move(terms)}};
    if (p.components() > 0) out["components"] = p.components();
    return out;
}

Rational rational_from_json(const nlohmann::json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw InvalidInput("rational must be a \"p/q\" string or an integer");
}

Poly poly_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw InvalidInput("polynomial JSON needs a \"terms\" array");
    PolyBuilder acc;
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("coeff") || !t.contains("monomial") || !t["monomial"].is_array())
            throw InvalidInput("each term needs \"coeff\" and \"monomial\"");
        Monomial m;
        for (const auto& f : t["monomial"]) {
            if (!f.is_array() || f.size() != 4 || !f[0].is_string() || f[0].get<std::string>().size() != 1 ||
                !f[1].is_number_integer() || !f[2].is_number_integer() || !f[3].is_number_integer())
                throw InvalidInput("monomial factor must be [family, component, index, exponent]");
            long e = f[3].get<long>();
            if (e < 1) throw InvalidInput("monomial exponent must be positive");
            VarId v(family_from_letter(f[0].get<std::string>()[0]), f[1].get<int>(), f[2].get<int>());
            m = m * Monomial::of(v, static_cast<unsigned>(e));
        }
        acc.add(m, rational_from_json(t["coeff"]));
    }
    if (j.contains("components")) acc.merge_components(j["components"].get<int>());
    Poly p = acc.build();
    return p.components() ? p.with_components(p.components()) : p;
}

} // namespace tauforge
