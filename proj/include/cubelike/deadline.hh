#ifndef CUBELIKE_DEADLINE_HH
#define CUBELIKE_DEADLINE_HH

#include <chrono>
#include <optional>
#include <string_view>

namespace cubelike
{
    /// Result of a search that may be cut short.
    enum class Outcome
    {
        yes,
        no,
        indeterminate
    };

    auto to_string(Outcome o) -> std::string_view;

    /// Cooperative cancellation point for backtracking searches. A default
    /// constructed deadline never expires.
    class Deadline
    {
        public:
            Deadline() = default;
            explicit Deadline(std::chrono::milliseconds budget) :
                _at(std::chrono::steady_clock::now() + budget)
            {
            }

            static auto never() -> Deadline { return Deadline{}; }

            auto unlimited() const -> bool { return ! _at.has_value(); }

            /// Cheap to call in tight loops: the clock is read every 1024 calls.
            auto expired() const -> bool
            {
                if (! _at)
                    return false;
                if (_expired)
                    return true;
                if ((++_calls & 1023) != 0)
                    return false;
                _expired = std::chrono::steady_clock::now() >= *_at;
                return _expired;
            }

        private:
            std::optional<std::chrono::steady_clock::time_point> _at;
            mutable unsigned _calls = 0;
            mutable bool _expired = false;
    };
}

#endif
