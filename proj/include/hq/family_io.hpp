// family_io.hpp — the plane-family file format and certificate documents.
//
// Family files are line-oriented text: line 1 declares the field ("q=2",
// "q=3^2"), every following non-comment line is one plane as four
// colon-separated field-element strings. "#" starts a comment. Duplicate
// planes are an error, not silently removed. Certificates render as a
// deterministic key-value text document or as JSON.
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "hq/pg3.hpp"
#include "hq/verify.hpp"

namespace hq::io {

// Filesystem-level problems (open/read/write failures).
class FileError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed family content; carries the 1-based offending line (0 when the
// problem is not tied to a single line).
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : message),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

std::string family_text(const pg3::Geometry& g, const verify::PlaneFamily& fam);
verify::PlaneFamily parse_family(const pg3::Geometry& g, std::string_view text);

verify::PlaneFamily load_family(const pg3::Geometry& g, const std::string& path);
void write_file(const std::string& path, std::string_view content);

std::string certificate_text(const verify::Certificate& cert);
std::string certificate_json(const verify::Certificate& cert);

}  // namespace hq::io
