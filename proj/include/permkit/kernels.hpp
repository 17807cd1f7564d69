#pragma once

#include <span>
#include <string_view>

namespace permkit::kernels {

/// Arithmetic inner loops used across the library. A scalar reference
/// implementation always exists; wider variants are selected at runtime
/// when the CPU supports them. The PERMKIT_KERNELS environment variable
/// ("scalar" or "avx2") overrides the automatic choice at startup.
/// Backend selection is not thread-safe; set it before spawning workers.
enum class Backend { scalar, avx2 };

Backend active_backend();
bool backend_available(Backend b);
void set_backend(Backend b);
std::string_view backend_name(Backend b);

/// Inner product of equal-length vectors.
double dot(std::span<const double> a, std::span<const double> b);

/// Sum of all entries.
double sum(std::span<const double> v);

/// Sum of absolute differences, i.e. the L1 distance.
double l1_distance(std::span<const double> a, std::span<const double> b);

/// y += a * x.
void axpy(double a, std::span<const double> x, std::span<double> y);

namespace detail {

double dot_scalar(std::span<const double> a, std::span<const double> b);
double sum_scalar(std::span<const double> v);
double l1_distance_scalar(std::span<const double> a,
                          std::span<const double> b);
void axpy_scalar(double a, std::span<const double> x, std::span<double> y);

#ifdef PERMKIT_HAVE_AVX2
double dot_avx2(std::span<const double> a, std::span<const double> b);
double sum_avx2(std::span<const double> v);
double l1_distance_avx2(std::span<const double> a, std::span<const double> b);
void axpy_avx2(double a, std::span<const double> x, std::span<double> y);
#endif

}  // namespace detail

}  // namespace permkit::kernels
