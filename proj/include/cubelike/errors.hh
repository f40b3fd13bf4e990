#ifndef CUBELIKE_ERRORS_HH
#define CUBELIKE_ERRORS_HH

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cubelike
{
    class DimensionMismatch : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    /// A size or enumeration limit was exceeded.
    class CapacityError : public std::length_error
    {
        public:
            using std::length_error::length_error;
    };

    class ParseError : public std::runtime_error
    {
        public:
            ParseError(const std::string & message, std::size_t offset) :
                std::runtime_error(message + " at byte " + std::to_string(offset)),
                _offset(offset)
            {
            }

            auto offset() const -> std::size_t { return _offset; }

        private:
            std::size_t _offset;
    };

    /// A construction would create a loop (an edge from a vertex to itself).
    class LoopError : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    class NotConnectedError : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    class UnknownFixture : public std::out_of_range
    {
        public:
            using std::out_of_range::out_of_range;
    };
}

#endif
