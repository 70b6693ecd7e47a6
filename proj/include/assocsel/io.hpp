#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "assocsel/functions.hpp"
#include "assocsel/universe.hpp"

namespace assocsel {

// SET format: optional first line "maxlen N", then one word per line ("-"
// for ε). Blank lines and lines starting with '#' are skipped.
struct SetFile {
    TargetSet set;
    bool had_header = false;
    std::vector<std::string> warnings;  // duplicates
};

// The universe is the header's, else default_max_len, else the longest
// listed word. Throws ParseError (with line) for bad tokens, words that do
// not fit, or a header that is not the first line.
SetFile parse_set(std::istream& in, const std::string& source,
                  std::optional<unsigned> default_max_len = std::nullopt);
SetFile parse_set_file(const std::string& path,
                       std::optional<unsigned> default_max_len = std::nullopt);
void write_set(std::ostream& out, const TargetSet& b);

// TABLE format: header "table maxlen N [single|multi]", then "x y -> V" with
// V in {x, y, xy, none}. Unlisted off-diagonal pairs are ∅, unlisted
// diagonal pairs {x}; a diagonal line may only say x or none.
MultiMap parse_table(std::istream& in, const std::string& source);
MultiMap parse_table_file(const std::string& path);
// Writes every cell that differs from the defaults. Round-trips through
// parse_table.
void write_table(std::ostream& out, const MultiMap& f);

// Selector spec strings:
//   maxlex | minlex | minmax-cx | partial-cx | prefer:set=PATH | table:PATH
//   prime:SPEC | dprime:SPEC | hat:SPEC | assoc:SPEC | assocp:SPEC | assocf:SPEC
//   score:set=PATH;base=SPEC | gapset:set=PATH[;lengths=1,2]
//   etime:set=PATH;base=SPEC[;upto=N]
// max_len is filled in by the first table or set file when unset, and a
// later conflicting length is a ConfigError. Library errors raised while
// building are rethrown as ConfigError naming the fragment.
MultiMap parse_selector_spec(const std::string& spec, std::optional<unsigned>& max_len);

} // namespace assocsel
