#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mate::classifier {

/// Lowercases ASCII and splits on anything that is not a letter or digit.
/// Bytes >= 0x80 count as letters so UTF-8 words stay whole.
std::vector<std::string> tokenize(std::string_view text);

}  // namespace mate::classifier
