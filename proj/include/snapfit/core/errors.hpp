#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace snapfit {

// Thrown when an integrator or plant step produces non-finite state.
// Carries the offending state so callers can report where things blew up.
class integration_fault : public std::runtime_error {
public:
    integration_fault(std::string what, std::vector<double> state)
        : std::runtime_error(std::move(what)), offending_state(std::move(state)) {}

    std::vector<double> offending_state;
};

class oracle_fault : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class plant_fault : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class executor_fault : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class training_fault : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class config_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace snapfit
