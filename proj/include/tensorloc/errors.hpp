#pragma once

#include <stdexcept>
#include <string>

namespace tloc {

struct TensorError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IndexOutOfRange : TensorError {
    using TensorError::TensorError;
};
struct DuplicateEntry : TensorError {
    using TensorError::TensorError;
};
struct StorageCapExceeded : TensorError {
    using TensorError::TensorError;
};
struct UnsortedKey : TensorError {
    using TensorError::TensorError;
};
struct DuplicateKey : TensorError {
    using TensorError::TensorError;
};
struct NotZTensor : TensorError {
    using TensorError::TensorError;
};
struct NotNonnegative : TensorError {
    using TensorError::TensorError;
};
struct DimensionTooLargeForExhaustiveCheck : TensorError {
    using TensorError::TensorError;
};
struct LengthMismatch : TensorError {
    using TensorError::TensorError;
};
struct WindowDegenerate : TensorError {
    using TensorError::TensorError;
};
struct PreconditionViolated : TensorError {
    using TensorError::TensorError;
};
struct InvalidPartition : TensorError {
    using TensorError::TensorError;
};
struct ParseError : TensorError {
    using TensorError::TensorError;
};

}  // namespace tloc
