#include "specgraph/potential_spec.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>

#include "specgraph/errors.hpp"

namespace specgraph {

namespace {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) const {
        raise(ErrorCode::Parse, "potential spec: " + what + " at position " +
                                    std::to_string(pos) + " in '" +
                                    std::string(text) + "'");
    }
    double number() {
        skip_ws();
        double value = 0.0;
        auto [ptr, ec] =
            std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc())
            fail("expected a number");
        pos = static_cast<std::size_t>(ptr - text.data());
        return value;
    }
    long integer() {
        skip_ws();
        long value = 0;
        auto [ptr, ec] =
            std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc())
            fail("expected an integer exponent");
        pos = static_cast<std::size_t>(ptr - text.data());
        return value;
    }
};

bool looks_like_formula(std::string_view text) {
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch)))
            continue;
        return ch == 'n' || ch == '+' || ch == '-' || ch == '.' ||
               std::isdigit(static_cast<unsigned char>(ch));
    }
    return false;
}

} // namespace

PotentialSpec PotentialSpec::parse(std::string_view text) {
    PotentialSpec spec;
    spec.text_ = std::string(text);
    if (!looks_like_formula(text)) {
        if (text.empty())
            raise(ErrorCode::Parse, "potential spec: empty spec");
        spec.kind_ = Kind::File;
        spec.path_ = std::string(text);
        return spec;
    }

    spec.kind_ = Kind::Formula;
    Cursor cur{text};

    // const | [a*] n [^k] [+ b]
    if (cur.peek() != 'n') {
        const double first = cur.number();
        if (cur.done()) { // plain constant
            spec.offset_ = first;
            return spec;
        }
        if (cur.peek() != '*')
            cur.fail("expected '*' or end of spec");
        ++cur.pos;
        spec.scale_ = first;
    } else {
        spec.scale_ = 1.0;
    }

    if (cur.peek() != 'n')
        cur.fail("expected 'n'");
    ++cur.pos;
    spec.has_n_ = true;
    spec.exponent_ = 1;

    if (cur.peek() == '^') {
        ++cur.pos;
        const long k = cur.integer();
        if (k < -64 || k > 64)
            cur.fail("exponent out of range [-64, 64]");
        spec.exponent_ = static_cast<int>(k);
    }
    if (cur.peek() == '+') {
        ++cur.pos;
        spec.offset_ = cur.number();
    }
    if (!cur.done())
        cur.fail("trailing input");
    return spec;
}

double PotentialSpec::value_at(std::size_t n) const {
    if (kind_ != Kind::Formula)
        raise(ErrorCode::InvalidArgument, "file-based potential has no formula value");
    if (!has_n_)
        return offset_;
    return scale_ * std::pow(static_cast<double>(n), exponent_) + offset_;
}

std::vector<double> PotentialSpec::evaluate(std::size_t n) const {
    std::vector<double> out;
    out.reserve(n);
    if (kind_ == Kind::Formula) {
        for (std::size_t k = 1; k <= n; ++k)
            out.push_back(value_at(k));
        return out;
    }
    std::ifstream in(path_);
    if (!in)
        raise(ErrorCode::Io, "cannot open potential file '" + path_ + "'");
    double value = 0.0;
    while (in >> value)
        out.push_back(value);
    if (!in.eof())
        raise(ErrorCode::Parse, "malformed number in potential file '" + path_ + "'");
    if (out.size() != n)
        raise(ErrorCode::Dimension,
              "potential file '" + path_ + "' holds " + std::to_string(out.size()) +
                  " values, expected " + std::to_string(n));
    return out;
}

std::vector<double> parse_potential_spec(std::string_view text, std::size_t n) {
    return PotentialSpec::parse(text).evaluate(n);
}

} // namespace specgraph
