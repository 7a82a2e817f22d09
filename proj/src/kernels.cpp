// Backend registry and runtime selection.

#include "tcs/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace tcs::kernels {

std::vector<const Backend*> available_backends()
{
    std::vector<const Backend*> out{&scalar_backend()};
    if (const Backend* b = avx2_backend())
        out.push_back(b);
    return out;
}

namespace {

const Backend* default_backend()
{
    if (const char* env = std::getenv("TCS_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0)
            return &scalar_backend();
        if (std::strcmp(env, "avx2") == 0 && avx2_backend())
            return avx2_backend();
        // unknown or unavailable value: fall through to auto selection
    }
    if (const Backend* b = avx2_backend())
        return b;
    return &scalar_backend();
}

const Backend*& active_slot()
{
    static const Backend* active = default_backend();
    return active;
}

} // namespace

const Backend& active_backend()
{
    return *active_slot();
}

void set_active_backend(const Backend& backend)
{
    active_slot() = &backend;
}

} // namespace tcs::kernels
