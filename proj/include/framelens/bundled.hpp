#pragma once

#include <string_view>

namespace framelens::bundled {

// Data files compiled into the library from data/. Each loader also accepts a
// path so edited copies can be used without rebuilding.
std::string_view nepl_yaml();
std::string_view victim_terms_yaml();
std::string_view negators_yaml();
std::string_view abbreviations_txt();
std::string_view vader_lexicon_tsv();

}  // namespace framelens::bundled
