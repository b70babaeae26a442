#pragma once

#include <cassert>
#include <type_traits>
#include <utility>
#include <variant>

namespace bml {

// Either a value or an error. A small stand-in for std::expected, which is
// not available under C++20.
template <typename T, typename E>
class Outcome {
    static_assert(!std::is_same_v<T, E>, "value and error types must differ");

public:
    Outcome(T value) : storage_(std::in_place_index<0>, std::move(value)) {}
    Outcome(E error) : storage_(std::in_place_index<1>, std::move(error)) {}

    bool ok() const noexcept { return storage_.index() == 0; }
    explicit operator bool() const noexcept { return ok(); }

    T& value() & {
        assert(ok());
        return std::get<0>(storage_);
    }
    const T& value() const& {
        assert(ok());
        return std::get<0>(storage_);
    }
    T&& value() && {
        assert(ok());
        return std::get<0>(std::move(storage_));
    }

    const E& error() const& {
        assert(!ok());
        return std::get<1>(storage_);
    }

    T& operator*() & { return value(); }
    const T& operator*() const& { return value(); }
    T* operator->() { return &value(); }
    const T* operator->() const { return &value(); }

private:
    std::variant<T, E> storage_;
};

}  // namespace bml
