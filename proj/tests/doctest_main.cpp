#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdlib>

int main(int argc, char** argv) {
    // our own pool parallelizes across tasks; keep BLAS single-threaded
    setenv("OPENBLAS_NUM_THREADS", "1", 0);
    return doctest::Context(argc, argv).run();
}
