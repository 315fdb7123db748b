#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace navlog
{

struct diagnostic
{
    int line = 0;   // 1-based, 0 when unknown
    int column = 0; // 1-based, 0 when unknown
    std::string message;

    [[nodiscard]] std::string to_string() const;
};

// Thrown for malformed input: syntax errors, unknown names, violated system invariants.
class input_error : public std::runtime_error
{
    std::vector< diagnostic > _diagnostics;

public:
    explicit input_error( std::vector< diagnostic > diagnostics );
    input_error( int line, int column, std::string message );

    [[nodiscard]] const std::vector< diagnostic >& diagnostics() const { return _diagnostics; }
};

// Thrown when a precondition of a library call is violated by the caller.
class usage_error : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

} // namespace navlog
