#ifndef SPECGRAPH_POTENTIAL_SPEC_HPP
#define SPECGRAPH_POTENTIAL_SPEC_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace specgraph {

/// Closed-form vertex potential over the 1-based index n:
///
///     spec := const | [a*] n [^k] [+ b]
///
/// with integer exponent k (negative allowed), or a path to a per-vertex
/// value file (one float per whitespace-separated token).  Anything whose
/// first character could start a formula is parsed as one and rejected with
/// a position on failure; everything else is treated as a file path.
class PotentialSpec {
public:
    enum class Kind { Formula, File };

    static PotentialSpec parse(std::string_view text);

    Kind kind() const noexcept { return kind_; }
    double scale() const noexcept { return scale_; }       // a
    int exponent() const noexcept { return exponent_; }    // k
    double offset() const noexcept { return offset_; }     // b
    const std::string& path() const noexcept { return path_; }

    /// Pure a*n^k term: no offset and the n factor present.
    bool is_monomial() const noexcept {
        return kind_ == Kind::Formula && has_n_ && offset_ == 0.0;
    }

    /// Value at 1-based index n (Formula kind only).
    double value_at(std::size_t n) const;

    /// Values on vertices 1..n; for File kind the file must hold exactly n
    /// numbers.
    std::vector<double> evaluate(std::size_t n) const;

    /// The original text, for reports.
    const std::string& text() const noexcept { return text_; }

private:
    PotentialSpec() = default;

    Kind kind_ = Kind::Formula;
    bool has_n_ = false;
    double scale_ = 0.0;
    int exponent_ = 0;
    double offset_ = 0.0;
    std::string path_;
    std::string text_;
};

/// Convenience wrapper matching the CLI contract.
std::vector<double> parse_potential_spec(std::string_view text, std::size_t n);

} // namespace specgraph

#endif
