#pragma once

// OEIS b-file parsing and cross-checks of the sequence generators.

#include "binetkit/harness.hpp"
#include "binetkit/number.hpp"

#include <filesystem>
#include <functional>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace binetkit {

struct BFile {
    std::string anum;
    std::vector<std::pair<long, Integer>> entries;

    long first_index() const;
    long last_index() const;
    /// Throws std::out_of_range when the index is absent.
    const Integer& at(long index) const;
};

class BFileError : public std::runtime_error {
public:
    BFileError(long line, const std::string& what);
    long line() const { return line_; }

private:
    long line_;
};

/// Lines of "index value"; '#' comments and blank lines are skipped.
/// Indices must increase strictly. Throws BFileError with the 1-based line.
BFile load_bfile(std::istream& in, std::string anum = {});
BFile parse_bfile(std::string_view text, std::string anum = {});

/// One "index value" line per entry, no comments.
std::string serialize(const BFile& b);

/// "A000045" from "A000045", "a45", "45" or "b000045.txt".
std::string normalize_anum(std::string_view text);

/// $BINETKIT_FIXTURES when set, otherwise the bundled data/oeis directory.
std::filesystem::path fixture_dir();

/// Throws std::runtime_error when no fixture exists for the sequence.
BFile load_fixture(std::string_view anum);

struct SequenceGenerator {
    std::string name;
    std::function<Integer(long)> value;
};

/// fibonacci, lucas, pell (u(2,-1)), jacobsthal (u(1,-2)), u5_4 (u(5,4)),
/// jacobsthal_lucas (v(1,-2)). Throws std::invalid_argument otherwise.
SequenceGenerator named_generator(std::string_view name);

/// The generator a sequence maps to, if any.
std::optional<SequenceGenerator> generator_for(std::string_view anum);

/// Sequences with a bundled fixture or a generator mapping.
std::vector<std::string> known_sequences();

/// VERIFIED_EXACT iff every fixture entry in [lo, hi] equals the generator.
/// Throws std::out_of_range when [lo, hi] leaves the fixture.
VerificationRecord cross_check(const BFile& b, const SequenceGenerator& gen, long lo, long hi);

#ifdef BINETKIT_WITH_FETCH
/// Downloads b<number>.txt from oeis.org. Throws std::runtime_error on failure.
BFile fetch_bfile(std::string_view anum);
#endif

}  // namespace binetkit
