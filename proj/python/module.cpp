#include <pybind11/pybind11.h>
PYBIND11_MODULE(weakclose, m) { m.doc() = "placeholder"; }
