#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ragprobe {

// Shared tokenizer for the hashing embedder, ROUGE-L and token accounting.
// Lowercases ASCII letters; a token is a maximal run of ASCII alphanumerics
// or non-ASCII bytes. Whitespace and ASCII punctuation separate tokens.
std::vector<std::string> tokenize(std::string_view text);

std::string to_lower(std::string_view text);

std::string trim(std::string_view text);

// Approximate token count used for cost accounting: whitespace-separated
// fields, not a model tokenizer.
std::int64_t count_tokens(std::string_view text);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

}  // namespace ragprobe
