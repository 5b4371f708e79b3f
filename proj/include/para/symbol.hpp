#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace para {

/// Generator families. ParaBoson/ParaFermion/Klein live at the abstract
/// level; GreenBoson/GreenFermion are the backend component symbols.
enum class Family : std::uint8_t {
    ParaBoson = 0,
    ParaFermion = 1,
    GreenBoson = 2,
    GreenFermion = 3,
    Klein = 4,
};

/// A single generator symbol, packed into 32 bits so words compare and
/// hash cheaply. Layout: family(3) | dagger(1) | mode(16) | green(12).
class GenSym {
  public:
    constexpr GenSym() : code_(0) {}

    static GenSym para_boson(int mode, bool dagger) {
        return make(Family::ParaBoson, mode, 0, dagger);
    }
    static GenSym para_fermion(int mode, bool dagger) {
        return make(Family::ParaFermion, mode, 0, dagger);
    }
    static GenSym green_boson(int mode, int green, bool dagger) {
        return make(Family::GreenBoson, mode, green, dagger);
    }
    static GenSym green_fermion(int mode, int green, bool dagger) {
        return make(Family::GreenFermion, mode, green, dagger);
    }
    /// dagger=false is K, dagger=true is K†.
    static GenSym klein(bool dagger) {
        GenSym s;
        s.code_ = pack(Family::Klein, 0, 0, dagger);
        return s;
    }

    Family family() const { return static_cast<Family>(code_ >> 29); }
    bool dagger() const { return (code_ >> 28) & 1u; }
    int mode() const { return static_cast<int>((code_ >> 12) & 0xFFFFu); }
    int green() const { return static_cast<int>(code_ & 0xFFFu); }

    bool is_klein() const { return family() == Family::Klein; }
    bool is_oscillator() const { return !is_klein(); }
    bool is_abstract() const {
        Family f = family();
        return f == Family::ParaBoson || f == Family::ParaFermion;
    }
    bool is_green() const {
        Family f = family();
        return f == Family::GreenBoson || f == Family::GreenFermion;
    }

    GenSym adjoint() const {
        GenSym s;
        s.code_ = code_ ^ (1u << 28);
        return s;
    }

    std::uint32_t code() const { return code_; }

    friend bool operator==(GenSym a, GenSym b) { return a.code_ == b.code_; }
    friend bool operator!=(GenSym a, GenSym b) { return a.code_ != b.code_; }
    friend bool operator<(GenSym a, GenSym b) { return a.code_ < b.code_; }

  private:
    static constexpr std::uint32_t pack(Family f, int mode, int green, bool dagger) {
        return (static_cast<std::uint32_t>(f) << 29) |
               (static_cast<std::uint32_t>(dagger) << 28) |
               ((static_cast<std::uint32_t>(mode) & 0xFFFFu) << 12) |
               (static_cast<std::uint32_t>(green) & 0xFFFu);
    }

    static GenSym make(Family f, int mode, int green, bool dagger) {
        if (mode < 1 || mode > 0xFFFF)
            throw std::invalid_argument("generator mode out of range: " + std::to_string(mode));
        bool is_green_family = (f == Family::GreenBoson || f == Family::GreenFermion);
        if (is_green_family && (green < 1 || green > 0xFFF))
            throw std::invalid_argument("Green component index out of range: " +
                                        std::to_string(green));
        if (!is_green_family && green != 0)
            throw std::invalid_argument("Green index on an abstract symbol");
        GenSym s;
        s.code_ = pack(f, mode, green, dagger);
        return s;
    }

    std::uint32_t code_;
};

/// Canonical text form: b2, b2', f1, b2.3' (mode.green), K, K~.
inline std::string to_string(GenSym s) {
    if (s.is_klein()) return s.dagger() ? "K~" : "K";
    Family f = s.family();
    char letter = (f == Family::ParaBoson || f == Family::GreenBoson) ? 'b' : 'f';
    std::string out(1, letter);
    out += std::to_string(s.mode());
    if (s.is_green()) {
        out += '.';
        out += std::to_string(s.green());
    }
    if (s.dagger()) out += '\'';
    return out;
}

}  // namespace para
