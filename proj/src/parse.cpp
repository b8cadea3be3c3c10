#include "holocert/parse.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace holocert {

namespace {

class ExprParser {
public:
    ExprParser(const std::string& text, std::string var) : text_(text), var_(std::move(var)) {}

    RationalFunction parse() {
        RationalFunction f = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return f;
    }

private:
    RationalFunction expr() {
        skip_ws();
        RationalFunction acc = term();
        for (;;) {
            skip_ws();
            if (consume('+')) acc += term();
            else if (consume('-')) acc -= term();
            else return acc;
        }
    }

    RationalFunction term() {
        RationalFunction acc = factor();
        for (;;) {
            skip_ws();
            if (consume('*')) {
                acc *= factor();
            } else if (consume('/')) {
                RationalFunction d = factor();
                if (d.is_zero()) fail("division by the zero expression");
                acc /= d;
            } else {
                return acc;
            }
        }
    }

    RationalFunction factor() {
        skip_ws();
        if (consume('-')) return -factor();
        if (consume('+')) return factor();
        return power();
    }

    RationalFunction power() {
        RationalFunction base = primary();
        skip_ws();
        if (consume('^')) {
            long e = integer_exponent();
            if (base.is_zero() && e < 0) fail("negative power of zero");
            return base.pow(e);
        }
        return base;
    }

    RationalFunction primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of expression");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            RationalFunction inner = expr();
            skip_ws();
            if (!consume(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return RationalFunction(Rational(integer_literal()));
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string name = text_.substr(start, pos_ - start);
            if (name != var_) {
                pos_ = start;
                fail("unknown identifier '" + name + "' (the variable here is '" + var_ + "')");
            }
            return RationalFunction::variable();
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    long integer_exponent() {
        skip_ws();
        bool neg = consume('-');
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected integer exponent after '^'");
        Int v = integer_literal();
        if (v > 64) fail("exponent too large");
        long e = static_cast<long>(v);
        return neg ? -e : e;
    }

    Int integer_literal() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return Int(text_.substr(start, pos_ - start));
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool consume(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, pos_); }

    const std::string& text_;
    std::string var_;
    std::size_t pos_ = 0;
};

}  // namespace

RationalFunction parse_expression(const std::string& text, const std::string& var) {
    return ExprParser(text, var).parse();
}

namespace {

class ExpansionParser {
public:
    explicit ExpansionParser(const std::string& text) : text_(text) {}

    Expansion parse() {
        skip_ws();
        if (!consume('1')) fail("expansion must start with the literal 1");
        Expansion e;
        bool have_remainder = false;
        for (;;) {
            skip_ws();
            if (pos_ == text_.size()) break;
            int sgn = 1;
            if (consume('+')) sgn = 1;
            else if (consume('-')) sgn = -1;
            else fail("expected '+' or '-'");
            skip_ws();
            if (peek() == 'O' || peek() == 'o') {
                if (sgn < 0) fail("the remainder term cannot be subtracted");
                e.beta = remainder();
                have_remainder = true;
                skip_ws();
                if (pos_ != text_.size()) fail("unexpected input after the remainder term");
                break;
            }
            ExpansionTerm t = term(sgn);
            e.terms.push_back(std::move(t));
        }
        if (!have_remainder) fail("expansion must end with a remainder term O(n^-beta)");
        e.validate();
        return e;
    }

private:
    ExpansionTerm term(int sgn) {
        LogRat coeff = coefficient();
        skip_ws();
        if (!consume('/')) fail("expected '/' after the term coefficient");
        skip_ws();
        if (!consume('n')) fail("expected 'n' in the term denominator");
        Rational alpha(1);
        skip_ws();
        if (consume('^')) alpha = exponent();
        if (sgn < 0) coeff = -coeff;
        return {alpha, std::move(coeff)};
    }

    LogRat coefficient() {
        skip_ws();
        if (peek() == '(') {
            std::size_t depth = 0;
            std::size_t start = pos_;
            do {
                if (pos_ >= text_.size()) fail("unbalanced parentheses in coefficient");
                if (text_[pos_] == '(') ++depth;
                if (text_[pos_] == ')') --depth;
                ++pos_;
            } while (depth > 0);
            std::string inner = text_.substr(start + 1, pos_ - start - 2);
            try {
                return parse_expression(inner, "L");
            } catch (const parse_error& err) {
                throw parse_error(err.what(), start + 1 + err.position);
            }
        }
        if (peek() == 'L') {
            ++pos_;
            return LogRat::variable();
        }
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return LogRat(Rational(Int(text_.substr(start, pos_ - start))));
        }
        fail("expected a coefficient: (expression in L), an integer, or L");
    }

    // integer, or (p/q)
    Rational exponent() {
        skip_ws();
        bool neg = consume('-');
        skip_ws();
        Rational value;
        if (consume('(')) {
            Int p = unsigned_int();
            skip_ws();
            if (!consume('/')) fail("expected '/' in fractional exponent");
            skip_ws();
            Int q = unsigned_int();
            if (q == 0) fail("zero denominator in exponent");
            skip_ws();
            if (!consume(')')) fail("expected ')' in fractional exponent");
            value = Rational(p, q);
        } else {
            value = Rational(unsigned_int());
        }
        return neg ? Rational(-value) : value;
    }

    Rational remainder() {
        ++pos_;  // O or o
        skip_ws();
        if (!consume('(')) fail("expected '(' after O");
        skip_ws();
        if (!consume('n')) fail("expected 'n' inside O(...)");
        skip_ws();
        if (!consume('^')) fail("expected '^' inside O(...)");
        Rational e = exponent();
        if (!(e < 0)) fail("remainder exponent must be negative, as in O(n^-4)");
        skip_ws();
        if (!consume(')')) fail("expected ')' closing O(...)");
        return Rational(-e);
    }

    Int unsigned_int() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected an unsigned integer");
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return Int(text_.substr(start, pos_ - start));
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool consume(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, pos_); }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

Expansion parse_expansion(const std::string& text) { return ExpansionParser(text).parse(); }

std::string print_expansion(const Expansion& e) {
    std::ostringstream os;
    os << "1";
    for (const auto& t : e.terms) {
        os << " + (" << t.coeff.str("L") << ")/n^";
        if (denominator(t.alpha) == 1) os << numerator(t.alpha).str();
        else os << "(" << to_string(t.alpha) << ")";
    }
    os << " + O(n^-";
    if (denominator(e.beta) == 1) os << numerator(e.beta).str();
    else os << "(" << to_string(e.beta) << ")";
    os << ")";
    return os.str();
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

Recurrence parse_recurrence_text(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::string t = trim(line);
        if (t.empty()) continue;
        std::size_t colon = t.find(':');
        if (colon == std::string::npos)
            throw parse_error("line " + std::to_string(lineno) + ": expected 'key: value'", 0);
        std::string key = trim(t.substr(0, colon));
        std::string value = trim(t.substr(colon + 1));
        if (kv.count(key))
            throw parse_error("line " + std::to_string(lineno) + ": duplicate key '" + key + "'", 0);
        kv[key] = value;
    }

    auto take = [&kv](const std::string& key) -> std::optional<std::string> {
        auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        std::string v = it->second;
        kv.erase(it);
        return v;
    };

    Recurrence rec;
    if (auto name = take("name")) rec.name = *name;

    auto order_text = take("order");
    if (!order_text) throw parse_error("missing required key 'order'", 0);
    rec.order = std::stoi(*order_text);
    if (rec.order < 1 || rec.order > 64) throw parse_error("order out of range", 0);

    if (auto offset_text = take("offset")) rec.offset = std::stoll(*offset_text);

    std::optional<RationalFunction> lhs;
    if (auto lhs_text = take("lhs")) {
        lhs = parse_expression(*lhs_text, "n");
        if (lhs->is_zero()) throw parse_error("lhs must be nonzero", 0);
    }

    for (int i = 1; i <= rec.order; ++i) {
        auto coeff_text = take("coeff" + std::to_string(i));
        if (!coeff_text) throw parse_error("missing required key 'coeff" + std::to_string(i) + "'", 0);
        RationalFunction c = parse_expression(*coeff_text, "n");
        if (lhs) c = c / *lhs;
        rec.coeffs.push_back(std::move(c));
    }

    auto initial_text = take("initial");
    if (!initial_text) throw parse_error("missing required key 'initial'", 0);
    for (const std::string& piece : split(*initial_text, ',')) {
        std::string v = trim(piece);
        if (v.empty()) throw parse_error("empty entry in 'initial'", 0);
        rec.initials.push_back(parse_rational(v));
    }

    if (auto scale_text = take("scale")) rec.scale = parse_expression(*scale_text, "n");

    if (!kv.empty()) throw parse_error("unknown key '" + kv.begin()->first + "'", 0);

    rec.validate();
    return rec;
}

Recurrence load_recurrence_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error("cannot open recurrence file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    Recurrence rec = parse_recurrence_text(buf.str());
    if (rec.name.empty()) {
        std::size_t slash = path.find_last_of("/\\");
        std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
        if (auto dot = base.rfind('.'); dot != std::string::npos) base.erase(dot);
        rec.name = base;
    }
    return rec;
}

}  // namespace holocert
