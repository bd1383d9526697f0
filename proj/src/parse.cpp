#include "stpow/parse.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace stpow {

namespace {

class Parser {
public:
    Parser(std::string_view s, const Ring& ring, const SymbolTable& symbols)
        : s_(s), ring_(ring), symbols_(symbols) {}

    Poly run() {
        Poly f = sum();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorKind::ParseError, what + " at position " + std::to_string(pos_));
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool at_factor_start() {
        skip();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '_';
    }

    u64 integer() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        u64 v = 0;
        auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, v);
        if (ec != std::errc()) fail("integer out of range");
        return v;
    }

    Poly sum() {
        skip();
        bool neg = false;
        if (accept('-')) neg = true;
        else accept('+');
        Poly acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else return acc;
        }
    }

    Poly term() {
        Poly acc = factor();
        for (;;) {
            if (accept('*')) {
                acc = acc * factor();
            } else if (accept('/')) {
                std::size_t at = pos_;
                u64 d = integer();
                if (d % ring_->p == 0)
                    throw Error(ErrorKind::DenominatorVanishes,
                                "denominator " + std::to_string(d) + " vanishes mod " + std::to_string(ring_->p) +
                                    " at position " + std::to_string(at));
                acc = acc.scaled(inv_mod(static_cast<u32>(d % ring_->p), ring_->p));
            } else if (at_factor_start()) {
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    Poly factor() {
        Poly base = atom();
        if (accept('^')) {
            u64 e = integer();
            if (e > static_cast<u64>(Mono::kMaxExp)) fail("exponent too large");
            base = base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Poly atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Poly f = sum();
            if (!accept(')')) fail("expected ')'");
            return f;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            u64 v = integer();
            return Poly::constant(ring_, static_cast<i64>(v % ring_->p));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string_view name = s_.substr(start, pos_ - start);
            int i = ring_->var_index(name);
            if (i >= 0) return Poly::var(ring_, i);
            if (auto it = symbols_.find(name); it != symbols_.end()) {
                require_same_ring(ring_, it->second.ring());
                return it->second;
            }
            pos_ = start;
            throw Error(ErrorKind::UnknownName,
                        "unknown name '" + std::string(name) + "' at position " + std::to_string(start));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    const Ring& ring_;
    const SymbolTable& symbols_;
};

}  // namespace

Poly parse_poly(std::string_view text, const Ring& ring, const SymbolTable& symbols) {
    return Parser(text, ring, symbols).run();
}

std::string mono_to_string(const RingSpec& ring, Mono m) {
    std::string out;
    auto emit = [&](int i) {
        int e = m[i];
        if (!e) return;
        if (!out.empty()) out += '*';
        out += ring.vars[i];
        if (e > 1) out += "^" + std::to_string(e);
    };
    if (ring.display_high_first)
        for (int i = ring.nvars() - 1; i >= 0; --i) emit(i);
    else
        for (int i = 0; i < ring.nvars(); ++i) emit(i);
    return out.empty() ? "1" : out;
}

std::string to_string(const Poly& f, bool signed_form) {
    if (f.is_zero()) return "0";
    const RingSpec& r = *f.ring();
    std::vector<Term> terms = f.terms();
    if (r.display_high_first) {
        // Within a degree, order by the exponent vector read from the last variable.
        auto rev = [&](Mono m) {
            std::array<int, Mono::kMaxVars> v{};
            for (int i = 0; i < r.nvars(); ++i) v[i] = m[r.nvars() - 1 - i];
            return v;
        };
        std::stable_sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
            int da = r.degree(a.mono), db = r.degree(b.mono);
            if (da != db) return da > db;
            return rev(a.mono) > rev(b.mono);
        });
    }
    std::string out;
    for (const auto& t : terms) {
        i64 c = signed_form ? signed_residue(t.coeff, r.p) : static_cast<i64>(t.coeff);
        bool neg = c < 0;
        u64 mag = static_cast<u64>(neg ? -c : c);
        if (out.empty()) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        if (t.mono.is_one()) {
            out += std::to_string(mag);
        } else {
            if (mag != 1) out += std::to_string(mag) + "*";
            out += mono_to_string(r, t.mono);
        }
    }
    return out;
}

}  // namespace stpow
