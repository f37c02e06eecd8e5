/* Compiles the public header as C and drives one round trip. */
#include <bsdisc/bsdisc.h>
#include <stdio.h>

int main(void)
{
    bsdisc_sequence *seq = NULL;
    bsdisc_disc_result r;
    if (bsdisc_sequence_create(5, &seq) != BSDISC_OK) return 1;
    if (bsdisc_disc_closed(seq, 17, &r) != BSDISC_OK || r.value != 25) return 1;
    bsdisc_sequence_destroy(seq);
    if (bsdisc_sequence_create(4, &seq) != BSDISC_INVALID_ARGUMENT) return 1;
    printf("%s\n", bsdisc_last_error());
    return 0;
}
