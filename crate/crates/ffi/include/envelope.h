#ifndef ENVELOPE_H
#define ENVELOPE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define ENV_OK 0
#define ENV_NULL_ARGUMENT 1
#define ENV_EMPTY_INPUT 2
#define ENV_SILENT_SIGNAL 3
#define ENV_NO_PULSES 4
#define ENV_INTERNAL 5

/* alpha <= 0 selects the automatic disc radius. Output buffers are owned by
 * the caller and must hold n entries each. */
int32_t env_frontiers(const double *signal, uint64_t n, double alpha,
                      uint64_t *upper_out, uint64_t *upper_len,
                      uint64_t *lower_out, uint64_t *lower_len);

int32_t env_envelope(const double *signal, uint64_t n, double alpha,
                     uint64_t *out, uint64_t *out_len);

/* capacity must be at least 16 bytes. */
int32_t env_version(char *out, uint64_t capacity);

#ifdef __cplusplus
}
#endif

#endif
