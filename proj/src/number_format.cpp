#include "bicomb/number_format.hpp"

#include <array>
#include <charconv>
#include <stdexcept>

namespace bicomb {

std::string format_double(double value)
{
    std::array<char, 64> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
    return std::string(buf.data(), end);
}

}  // namespace bicomb
