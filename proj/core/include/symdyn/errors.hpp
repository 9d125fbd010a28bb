#ifndef SYMDYN_ERRORS_HPP
#define SYMDYN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace symdyn {

// Exit-code taxonomy: 1 input, 2 precondition, 3 budget, 4 integrity.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
    static constexpr int exit_code = 1;
};

struct precondition_error : std::runtime_error {
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
    static constexpr int exit_code = 2;
};

struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
    static constexpr int exit_code = 3;
};

struct integrity_error : std::runtime_error {
    explicit integrity_error(const std::string& what) : std::runtime_error(what) {}
    static constexpr int exit_code = 4;
};

} // namespace symdyn

#endif
