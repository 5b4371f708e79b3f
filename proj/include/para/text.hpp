#pragma once

#include <cctype>
#include <stdexcept>
#include <string>

#include "para/element.hpp"

namespace para {

/// Canonical text form of an element: terms in word order, explicit signs,
/// dagger as a trailing apostrophe, K† as K~. Round-trips through
/// parse_element exactly.
inline std::string to_string(const Element& e) {
    if (e.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : e.terms()) {
        bool neg = c < 0;
        Scalar mag = neg ? Scalar(-c) : c;
        if (first) {
            if (neg) out += '-';
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (mag != 1 || w.empty()) {
            out += pretty_string(mag);
            if (!w.empty()) out += ' ';
        }
        if (!w.empty()) out += to_string(w);
    }
    return out;
}

namespace detail {

class ElementParser {
  public:
    explicit ElementParser(const std::string& s) : s_(s) {}

    Element parse() {
        Element result;
        skip_ws();
        if (done()) throw error("empty input");
        // "0" alone is the zero element.
        if (s_ == "0") return result;
        bool neg = consume_sign(true);
        for (;;) {
            auto [w, c] = parse_term();
            result.add_term(std::move(w), neg ? -c : c);
            skip_ws();
            if (done()) break;
            neg = consume_sign(false);
        }
        return result;
    }

  private:
    std::pair<Word, Scalar> parse_term() {
        skip_ws();
        Scalar coeff(1);
        bool saw_number = false;
        if (!done() && std::isdigit(peek())) {
            coeff = parse_rational();
            saw_number = true;
        }
        Word w;
        skip_ws();
        while (!done() && (peek() == 'b' || peek() == 'f' || peek() == 'K')) {
            w.push_back(parse_symbol());
            skip_ws();
        }
        if (!saw_number && w.empty()) throw error("expected term");
        return {std::move(w), std::move(coeff)};
    }

    Scalar parse_rational() {
        std::string tok;
        while (!done() && (std::isdigit(peek()) || peek() == '/')) tok += next();
        return scalar_from_string(tok);
    }

    GenSym parse_symbol() {
        char head = next();
        if (head == 'K') {
            bool dag = !done() && peek() == '~';
            if (dag) next();
            return GenSym::klein(dag);
        }
        int mode = parse_int();
        int green = 0;
        if (!done() && peek() == '.') {
            next();
            green = parse_int();
        }
        bool dag = !done() && peek() == '\'';
        if (dag) next();
        if (green > 0) {
            return head == 'b' ? GenSym::green_boson(mode, green, dag)
                               : GenSym::green_fermion(mode, green, dag);
        }
        return head == 'b' ? GenSym::para_boson(mode, dag)
                           : GenSym::para_fermion(mode, dag);
    }

    int parse_int() {
        if (done() || !std::isdigit(peek())) throw error("expected index");
        int v = 0;
        while (!done() && std::isdigit(peek())) v = v * 10 + (next() - '0');
        return v;
    }

    bool consume_sign(bool leading) {
        skip_ws();
        if (done()) throw error("dangling sign");
        if (peek() == '+') {
            next();
            return false;
        }
        if (peek() == '-') {
            next();
            return true;
        }
        if (!leading) throw error("expected '+' or '-'");
        return false;
    }

    std::invalid_argument error(const std::string& what) const {
        return std::invalid_argument("parse error at offset " + std::to_string(pos_) +
                                     ": " + what);
    }

    bool done() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    char next() { return s_[pos_++]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Element parse_element(const std::string& s) {
    return detail::ElementParser(s).parse();
}

}  // namespace para
