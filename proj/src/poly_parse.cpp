#include "gci/poly_parse.hpp"

#include <cctype>
#include <map>

#include "gci/errors.hpp"

namespace gci {
namespace {

// Terms without a declared degree; subexpressions like (y0 + y1) need not
// match the final degree.
using RawPoly = std::map<Exponents, Coefficient>;

class Parser {
public:
    Parser(std::string_view text, const Ambient& ambient, const ParseOptions& opts)
        : text_(text), ambient_(ambient), opts_(opts) {}

    RawPoly parse() {
        RawPoly r = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return r;
    }

private:
    std::string_view text_;
    const Ambient& ambient_;
    const ParseOptions& opts_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError("syntax error: " + msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Coefficient one() const { return Coefficient::one(opts_.field); }

    RawPoly unit() const { return {{Exponents(ambient_.num_vars(), 0), one()}}; }

    static void add_into(RawPoly& acc, const RawPoly& x, bool negate) {
        for (const auto& [e, c] : x) {
            auto [it, inserted] = acc.try_emplace(e, negate ? -c : c);
            if (!inserted) {
                it->second += negate ? -c : c;
                if (it->second.is_zero()) acc.erase(it);
            }
        }
    }

    static RawPoly multiply(const RawPoly& a, const RawPoly& b) {
        RawPoly r;
        for (const auto& [ea, ca] : a)
            for (const auto& [eb, cb] : b) {
                Exponents e(ea.size());
                for (std::size_t v = 0; v < e.size(); ++v)
                    if (__builtin_add_overflow(ea[v], eb[v], &e[v]))
                        throw ValidationError("exponent overflow while parsing");
                add_into(r, {{e, ca * cb}}, false);
            }
        return r;
    }

    RawPoly expr() {
        bool neg = accept('-');
        RawPoly acc;
        add_into(acc, term(), neg);
        for (;;) {
            if (accept('+'))
                add_into(acc, term(), false);
            else if (accept('-'))
                add_into(acc, term(), true);
            else
                break;
        }
        return acc;
    }

    RawPoly term() {
        RawPoly acc = factor();
        while (accept('*')) acc = multiply(acc, factor());
        return acc;
    }

    std::string digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return std::string(text_.substr(start, pos_ - start));
    }

    int small_int() {
        std::string d = digits();
        if (d.size() > 6) fail("exponent too large");
        return std::stoi(d);
    }

    RawPoly factor() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            RawPoly r = expr();
            if (!accept(')')) fail("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num(digits());
            mpq_class value(num);
            if (accept('/')) {
                mpz_class den(digits());
                if (den == 0) fail("zero denominator");
                value = mpq_class(num, den);
                value.canonicalize();
            }
            Coefficient k = Coefficient::from_rational(value, opts_.field);
            if (k.is_zero()) return {};
            return {{Exponents(ambient_.num_vars(), 0), k}};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            RawPoly base;
            std::optional<std::size_t> var = ambient_.find_var(name);
            if (var) {
                Exponents e(ambient_.num_vars(), 0);
                e[*var] = 1;
                base = {{e, one()}};
            } else if (opts_.named && opts_.named->count(name)) {
                for (const auto& [e, k] : opts_.named->at(name).terms()) base.emplace(e, k);
            } else {
                pos_ = start;
                fail("unknown identifier '" + name + "'");
            }
            if (!accept('^')) return base;
            bool negative = accept('-');
            int n = small_int();
            if (negative) {
                if (!var) fail("negative exponent on a named polynomial");
                std::size_t f = ambient_.factor_of_var(*var);
                if (opts_.laurent.size() <= f || !opts_.laurent[f])
                    fail("negative exponent on non-Laurent variable '" + name + "'");
                Exponents e(ambient_.num_vars(), 0);
                e[*var] = -n;
                return {{e, one()}};
            }
            RawPoly r = unit();
            for (int k = 0; k < n; ++k) r = multiply(r, base);
            return r;
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const AmbientPtr& ambient, const std::vector<int>& degrees,
                     const ParseOptions& opts) {
    RawPoly raw = Parser(text, *ambient, opts).parse();
    MultiPoly p(ambient, degrees, opts.field, opts.laurent);
    for (const auto& [e, c] : raw) p.add_term(e, c);
    return p;
}

MultiPoly parse_poly_infer(std::string_view text, const AmbientPtr& ambient, const ParseOptions& opts) {
    RawPoly raw = Parser(text, *ambient, opts).parse();
    if (raw.empty()) throw ValidationError("cannot infer the degree of the zero polynomial");
    std::vector<int> deg(ambient->num_factors(), 0);
    const Exponents& e0 = raw.begin()->first;
    for (std::size_t v = 0; v < e0.size(); ++v) deg[ambient->factor_of_var(v)] += e0[v];
    MultiPoly p(ambient, deg, opts.field, opts.laurent);
    for (const auto& [e, c] : raw) p.add_term(e, c);
    return p;
}

}  // namespace gci
