#ifndef S3C_OMP_SHIM_HPP
#define S3C_OMP_SHIM_HPP

#if defined(_OPENMP)
#include <omp.h>
#else
inline int omp_get_max_threads() { return 1; }
inline int omp_get_thread_num() { return 0; }
inline int omp_get_num_threads() { return 1; }
inline double omp_get_wtime() { return 0; }
#endif

#endif
