#pragma once

#include <vector>

namespace pvbess::kernels {

// Data-parallel inner loops come in an OpenMP flavor and a serial reference
// flavor. Both produce bitwise-identical results: every output element is
// written by exactly one thread and accumulated in the same order, and
// reductions are limited to max (order-independent). Tests compare the two
// paths element for element; tools/bench_kernels compares their throughput.
enum class Exec { Serial, Parallel };

// Parallel unless the environment sets PVBESS_SERIAL=1.
Exec default_exec();

struct Triplet {
    int row;
    int col;
    double value;
};

// Compressed sparse row matrix; duplicate triplets are summed on build.
struct Csr {
    int rows = 0;
    int cols = 0;
    std::vector<int> row_ptr;  // size rows + 1
    std::vector<int> col;
    std::vector<double> val;

    static Csr from_triplets(int rows, int cols, std::vector<Triplet> triplets);
    Csr transposed() const;
    size_t nnz() const { return val.size(); }
};

// y = A * x
void spmv(const Csr& a, const double* x, double* y, Exec mode);
void spmv(const Csr& a, const std::vector<double>& x, std::vector<double>& y, Exec mode);

// slack[i] = quad[i] - coeff_over_nom * p[i]^2  -- the cone slack of a
// quadratic loss site against its reported quadratic loss variable.
void quad_slack(const double* p, const double* quad, int n, double coeff_over_nom,
                double* slack, Exec mode);

// max over i of x[i]; -inf for empty input.
double max_val(const double* x, int n, Exec mode);

// max over i of |x[i]|.
double max_abs(const double* x, int n, Exec mode);

// max over i of min(a[i], b[i]); the complementarity overlap of two
// opposing flow arrays.
double max_pairwise_min(const double* a, const double* b, int n, Exec mode);

} // namespace pvbess::kernels
