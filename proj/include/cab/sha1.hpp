#pragma once

#include <string>
#include <string_view>

namespace cab {

/// Lowercase hex SHA-1 digest of the bytes.
std::string sha1_hex(std::string_view data);

/// Content hash the way git hashes a blob: sha1("blob <size>\0" + data).
std::string git_blob_sha1(std::string_view data);

}  // namespace cab
