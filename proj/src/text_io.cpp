/*
   Copyright 2026 The hlfsym Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "hlf/text_io.hpp"

#include <cctype>
#include <functional>

namespace hlf {

namespace {

template <typename V>
struct Ops {
    std::function<V(std::int64_t)> number;
    std::function<V(const std::string&)> variable;
    std::function<V(const V&, const V&)> add, sub, mul, div;
    std::function<V(const V&, long)> pow;
    std::function<V(const V&)> neg;
};

template <typename V>
class Parser {
   public:
    Parser(const std::string& s, const Ops<V>& ops) : s_(s), ops_(ops) {}

    V run() {
        V v = expr();
        ws();
        if (pos_ < s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
        return v;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw InputError("parse error at column " + std::to_string(pos_ + 1) + " of \"" + s_ + "\": " + msg);
    }

   private:
    void ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    V expr() {
        bool negate = eat('-');
        if (!negate) eat('+');
        V v = term();
        if (negate) v = ops_.neg(v);
        for (;;) {
            if (eat('+'))
                v = ops_.add(v, term());
            else if (eat('-'))
                v = ops_.sub(v, term());
            else
                return v;
        }
    }

    V term() {
        V v = power();
        for (;;) {
            if (eat('*'))
                v = ops_.mul(v, power());
            else if (eat('/'))
                v = ops_.div(v, power());
            else
                return v;
        }
    }

    V power() {
        V b = primary();
        if (eat('^')) b = ops_.pow(b, exponent());
        return b;
    }

    long exponent() {
        bool paren = eat('(');
        bool negate = eat('-');
        if (!negate) eat('+');
        ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected an integer exponent");
        long e = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            e = e * 10 + (s_[pos_++] - '0');
            if (e > 1000000) fail("exponent too large");
        }
        if (paren && !eat(')')) fail("expected ')'");
        return negate ? -e : e;
    }

    V primary() {
        if (eat('(')) {
            V v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (eat('-')) return ops_.neg(power());
        ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::int64_t n = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                n = n * 10 + (s_[pos_++] - '0');
                if (n > (std::int64_t{1} << 40)) fail("integer literal too large");
            }
            return ops_.number(n);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            try {
                return ops_.variable(name);
            } catch (const InputError&) {
                pos_ = start;
                fail("unknown name '" + name + "'");
            }
        }
        fail(std::string("unexpected '") + c + "'");
    }

    const std::string& s_;
    const Ops<V>& ops_;
    std::size_t pos_ = 0;
};

template <typename V>
V run(const std::string& text, const Ops<V>& ops) {
    try {
        return Parser<V>(text, ops).run();
    } catch (const NotInvertible& e) {
        throw InputError(std::string("in \"") + text + "\": " + e.what());
    }
}

Elem generator_of(const GaloisRing& F, const std::string& name) {
    if (F.degree() == 1) throw InputError(name + " needs an extension field");
    return F.generator();
}

// Constant w of the base field F seen inside L, and v the generator of L when L is an extension.
Ops<RingElem> element_ops(const GaloisRing& F, const GaloisRing& L) {
    Ops<RingElem> o;
    o.number = [&L](std::int64_t n) { return RingElem(L, L.from_int(n)); };
    o.variable = [&F, &L](const std::string& name) {
        if (name == "w") return RingElem(L, embedding(F, L).map(generator_of(F, "w")));
        if (name == "v" && &L != &F) return RingElem(L, L.generator());
        throw InputError(name);
    };
    o.add = [](const RingElem& a, const RingElem& b) { return a + b; };
    o.sub = [](const RingElem& a, const RingElem& b) { return a - b; };
    o.mul = [](const RingElem& a, const RingElem& b) { return a * b; };
    o.div = [](const RingElem& a, const RingElem& b) { return RingElem(*a.ring, a.ring->mul(a.value, a.ring->inv(b.value))); };
    o.pow = [](const RingElem& a, long e) { return RingElem(*a.ring, a.ring->pow_signed(a.value, e)); };
    o.neg = [](const RingElem& a) { return -a; };
    return o;
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\n\r"), b = s.find_last_not_of(" \t\n\r");
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

}  // namespace

Elem parse_element(const GaloisRing& F, const std::string& text) { return run(text, element_ops(F, F)).value; }

Laurent2 parse_series(const GaloisRing& F, const std::string& text, const Window& w) {
    Ops<Laurent2> o;
    o.number = [&F](std::int64_t n) { return Laurent2::constant(F, F.from_int(n)); };
    o.variable = [&F](const std::string& name) {
        if (name == "t1") return Laurent2::monomial(F, F.one(), 1, 0);
        if (name == "t2") return Laurent2::monomial(F, F.one(), 0, 1);
        if (name == "w") return Laurent2::constant(F, generator_of(F, "w"));
        throw InputError(name);
    };
    o.add = [](const Laurent2& a, const Laurent2& b) { return a + b; };
    o.sub = [](const Laurent2& a, const Laurent2& b) { return a - b; };
    o.mul = [](const Laurent2& a, const Laurent2& b) { return a * b; };
    o.div = [w](const Laurent2& a, const Laurent2& b) { return a * ls2_inv(b, w); };
    o.pow = [w](const Laurent2& a, long e) { return ls2_pow(a, e, w); };
    o.neg = [](const Laurent2& a) { return -a; };
    return run(text, o);
}

RationalFunction parse_fraction(const GaloisRing& F, const std::string& text) {
    Ops<RationalFunction> o;
    o.number = [&F](std::int64_t n) { return RationalFunction::constant(F, F.from_int(n)); };
    o.variable = [&F](const std::string& name) {
        if (name == "X") return RationalFunction::from_form(Form::variable(F, 0));
        if (name == "Y") return RationalFunction::from_form(Form::variable(F, 1));
        if (name == "Z") return RationalFunction::from_form(Form::variable(F, 2));
        if (name == "w") return RationalFunction::constant(F, generator_of(F, "w"));
        throw InputError(name);
    };
    o.add = [](const RationalFunction& a, const RationalFunction& b) { return a + b; };
    o.sub = [](const RationalFunction& a, const RationalFunction& b) { return a - b; };
    o.mul = [](const RationalFunction& a, const RationalFunction& b) { return a * b; };
    o.div = [](const RationalFunction& a, const RationalFunction& b) { return a / b; };
    o.pow = [](const RationalFunction& a, long e) { return a.pow(e); };
    o.neg = [](const RationalFunction& a) { return -a; };
    return run(text, o);
}

RationalFunction parse_function(const GaloisRing& F, const std::string& text) {
    RationalFunction f = parse_fraction(F, text);
    if (!f.is_zero() && f.degree() != 0)
        throw InputError("\"" + text + "\" has degree " + std::to_string(f.degree()) +
                         "; a function needs numerator and denominator of equal degree");
    return f;
}

Form parse_form(const GaloisRing& F, const std::string& text) {
    Ops<Form> o;
    o.number = [&F](std::int64_t n) { return Form::constant(F, F.from_int(n)); };
    o.variable = [&F](const std::string& name) {
        if (name == "X") return Form::variable(F, 0);
        if (name == "Y") return Form::variable(F, 1);
        if (name == "Z") return Form::variable(F, 2);
        if (name == "w") return Form::constant(F, generator_of(F, "w"));
        throw InputError(name);
    };
    o.add = [](const Form& a, const Form& b) { return a + b; };
    o.sub = [](const Form& a, const Form& b) { return a - b; };
    o.mul = [](const Form& a, const Form& b) { return a * b; };
    o.div = [](const Form& a, const Form& b) -> Form {
        if (b.degree == 0 && !b.is_zero()) return a.scaled(b.ring->inv(b.leading()));
        throw InputError("division in a polynomial");
    };
    o.pow = [](const Form& a, long e) -> Form {
        if (e < 0) throw InputError("negative power in a polynomial");
        return a.pow(static_cast<int>(e));
    };
    o.neg = [](const Form& a) { return -a; };
    return run(text, o);
}

P1Function parse_p1_function(const GaloisRing& F, const std::string& text) {
    Ops<P1Function> o;
    o.number = [&F](std::int64_t n) { return P1Function::constant(F, F.from_int(n)); };
    o.variable = [&F](const std::string& name) {
        if (name == "x") return P1Function::x(F);
        if (name == "w") return P1Function::constant(F, generator_of(F, "w"));
        throw InputError(name);
    };
    o.add = [](const P1Function& a, const P1Function& b) { return a + b; };
    o.sub = [](const P1Function& a, const P1Function& b) { return a - b; };
    o.mul = [](const P1Function& a, const P1Function& b) { return a * b; };
    o.div = [](const P1Function& a, const P1Function& b) { return a / b; };
    o.pow = [](const P1Function& a, long e) { return a.pow(e); };
    o.neg = [&F](const P1Function& a) { return P1Function::constant(F, F.zero()) - a; };
    return run(text, o);
}

std::vector<std::string> split_vector(const std::string& text) {
    std::string s = trim(text);
    if (!s.empty() && (s.front() == '[' || s.front() == '(')) {
        const char close = s.front() == '[' ? ']' : ')';
        if (s.back() != close) throw InputError("unbalanced brackets in \"" + text + "\"");
        s = s.substr(1, s.size() - 2);
    }
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(' || c == '[') ++depth;
        if (c == ')' || c == ']') --depth;
        if (depth < 0) throw InputError("unbalanced brackets in \"" + text + "\"");
        if (c == ',' && depth == 0) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (depth != 0) throw InputError("unbalanced brackets in \"" + text + "\"");
    if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
    return out;
}

ClosedPoint parse_point(const GaloisRing& F, const std::string& text) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i)
        if (i == text.size() || text[i] == ';') {
            parts.push_back(trim(text.substr(start, i - start)));
            start = i + 1;
        }
    if (parts.size() < 2 || parts.size() > 3) throw InputError("point \"" + text + "\": expected \"Z=1;(a,b)[;d=k]\"");
    int chart = -1;
    const std::string& c = parts[0];
    if (c == "X=1") chart = 0;
    if (c == "Y=1") chart = 1;
    if (c == "Z=1") chart = 2;
    if (chart < 0) throw InputError("point \"" + text + "\": chart must be X=1, Y=1 or Z=1");
    int d = 1;
    if (parts.size() == 3) {
        if (parts[2].rfind("d=", 0) != 0) throw InputError("point \"" + text + "\": expected d=k");
        try {
            d = std::stoi(parts[2].substr(2));
        } catch (const std::exception&) {
            throw InputError("point \"" + text + "\": bad degree");
        }
        if (d < 1 || F.degree() * d > kMaxDegree) throw InputError("point \"" + text + "\": degree out of range");
    }
    auto coords = split_vector(parts[1]);
    if (coords.size() != 2) throw InputError("point \"" + text + "\": expected two affine coordinates");
    const GaloisRing& L = GaloisRing::field(F.p(), F.degree() * d);
    const auto ops = element_ops(F, L);
    std::array<Elem, 3> pt{};
    const int va = chart == 0 ? 1 : 0, vb = chart == 2 ? 1 : 2;
    pt[chart] = L.one();
    pt[va] = run(coords[0], ops).value;
    pt[vb] = run(coords[1], ops).value;
    return closed_point(F, L, pt);
}

}  // namespace hlf
