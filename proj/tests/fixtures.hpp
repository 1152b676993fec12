#pragma once

// Shared test fixtures: two tiny curve profiles for exhaustive checks, and
// pre-generated parameter files for the real security levels so suites don't
// pay for (or depend on) parameter search. The texts were produced once by
// GroupParams::generate under fixed seeds and are pinned here verbatim —
// golden serialization fixtures depend on them staying put.

#include <string>

#include "aben/params.hpp"

namespace fixtures {

// Smallest usable profile: q=11, r=3, h=4. The whole curve has 12 points,
// the pairing subgroup three — small enough to enumerate everything.
// Gate arity is capped at 2 (evaluation points must be nonzero mod r).
inline aben::GroupParams toy() {
    return aben::GroupParams::from_values(11, 3, 4, 5, 3, 0);
}

// Second small profile with room for wide gates: q=443, r=37, h=12.
// Supports the 30-attribute bench workloads (arity < r) while keeping
// field elements two bytes wide.
inline aben::GroupParams toy2() {
    return aben::GroupParams::from_values(443, 37, 12, 183, 151, 0);
}

inline const char* params_text(int level) {
    switch (level) {
        case 80:
            return
                "type=a\n"
                "q=c6c40ec40f21286f7fb82b5b320cc4d7645f6512449be7a488afd66b4a62c6d10713af633187b14bc3d206d62e6136c9e570ee0ab065833a1693399d11786e73\n"
                "r=cc6e982faf1b1fc8f53197b79cbf29d6e6563245\n"
                "h=f8e790afbae9c0a6a53dbceb42bc1002f74544bff0f2638e18585a6b93962e9f3332fb2f620340d3a38415e4\n"
                "gx=17cff81e3ac80d4a5f9ddad09bfa97807ac26bc8fdde604b9dc981799801fb7ac5d216f2cbaa3b1de8ebe3363f45339ddd688e518c11562064f9fb8616fccc4c\n"
                "gy=835793aff0bc9be413c87ead138f69b2005e52b74c419c78516c3043e85a3822f98506166555eed4417f5322b353d40863c1de129fbab86b76e0b2c0e141f675\n"
                "level=80\n";
        case 112:
            return
                "type=a\n"
                "q=f32a20b22f8483d87a400cb01dde1428300274575ae278bf3c44b4f56982d3fc122e09de2d925962161c0da952da94a4f789def49b8b11e6685347906d9fbd12ac051d2073131239a92236869263b4518a4f0756361ae3d36bfa1b978942cdbac7fd2e042793b5d4f75c4a6b580b27f9b241f5ccf8b71b98c7fa073337f115bb\n"
                "r=d05bd2d07a0f956d6553ac3cddf3c3d59b3bd0c283661baa1d66d60b\n"
                "h=12ac3a64ca5767f85c51182f721749d2505492bd1bcac2aad40b94719304457dfdef6b56f1025df0fe8abcc370205978eb846005bc11d9437c3cc2ad35076a5fe3ee9906ee807e6251668e1a9c2938cdaebd08a259e1851f4e3c0c6fd8ae3c91a047382b4\n"
                "gx=bb8e7b17db4f7bd78e5c0ff5c1e88d139d8cc79f57bfa46d8563962db7e08f731742cd7e69078ff902861cb1460cb70caee2736985030dca6b2e5b117f1fce9b091dc4563a51ecff4610efac59c84ac544d9e63e8061f9e978769a872b1d3922a8e9c22575698a040d29392163f719de8007e36a7a909f1a3afb92b257e94f1b\n"
                "gy=7866b66fef30669f87fd46366b82341a71dbb2ecedc3b8a64220ed386de79f4b230ecc5aaa35b2524a742a0d1635eaaeb43b05e669f8ec6079ef89ae16d50714140d05494789db9faa12aaf1515accba536b9691132f9eae11cd11bfb49486d120ff0916b3c12a81c04ab8c48e11514449b7ce8a04d7655206b6cbefdbb8f548\n"
                "level=112\n";
        case 128:
            return
                "type=a\n"
                "q=8e4c969798408692b917708e39db48a3a3037fa255f488a89c930bad81a7575398b8edc2de18cf3f68a7fb6c4227e92f9349f4ff1b5bfc503ca1fe7993e46aa63ee2ef94ead3dac7ee61aba1b2f0f5b20921fc743e4cbfec7efc82d33b129d9622d5c08cb37cdba0de0102f1cfb5576cc31c666ea01fa3125e8c8fee0eee3255b3bbcd0a26b2187f309978694ce3895c7e95e1daf06fded08fc09242b94ae822532415bdd9b0d3025edc5aed07994657b1e2f2b1e4af14073774441d566e7f87\n"
                "r=b7f69c2a0b57971e9c99f7840191103790127ec23d89fe31edfe7126ae420b23\n"
                "h=c6055bd56b187f6f47ef68a49d1526acd1a8bb60b306112bb555bbd814e766f206bc673e03e69915c042ecc3ba47f522e1479d4d6fe341c0052a097fd74a857d1430a8aeb0a93d42231dd6fbddd3f40c1f7ac57fac22344d9ea44a1074177e1aff5b39322a419c0405f17d56041ae249b61610e9030301760822649409ea4464e39c3fa8782f56fca6b9cbc1af0adc4c54db224ee4f7a6fc0a2c6629d6ed1ed8\n"
                "gx=5656d8807a37dc992de6a7f8b2c4d76f645d2a5def6696fe99c0eb3d779a1af5e762239f797a8bf4473ff1536d6207cafd134924b26d4b0407a2c24a55dcd1e5b9fd2459d3166de5ec0d8f96252c504124bce05efa66f336d1f14d8cae9db40031574d7a5548eb54ee07de9ebe3ba680eb3acf91e0571ad9e91fb6f18ca58888bfe7c6f8778586c43363cd06b0e9db745886f84333a4be6772f97ac47c583f84818ecc97a8a1d34e2ac79356d628b2176d66f0e299372934d649a4a5aaeeffbf\n"
                "gy=9e68bc79da543830d8277e2c6d499864013f9d95d8c97cd28ba10176381e91ea7ebd78e4534fc5afc891609af99f1430985e97cb9288b3ae29a368b103b3178977fc1b3c095d5313127f08c539482022671429f1cc3f82666891828b4ec92e802336e3fa156f9b042eef8b1b870d1085b1b899754bfb2d1648e548f101b6c7b524eb89d7a9ef874cb9b1dc496304ca3922c33fb0c0c4eb3a3da8b0f0ab7805f52ffddffb25175fc8df1ebf7eb6f8d1240f3291f9dca5045a21d4e4577601c85\n"
                "level=128\n";
    }
    return "";
}

// Cached per-level params (parse once per process).
inline const aben::GroupParams& level_params(int level) {
    static const aben::GroupParams p80 = aben::GroupParams::parse_text(params_text(80));
    static const aben::GroupParams p112 = aben::GroupParams::parse_text(params_text(112));
    static const aben::GroupParams p128 = aben::GroupParams::parse_text(params_text(128));
    switch (level) {
        case 112: return p112;
        case 128: return p128;
        default: return p80;
    }
}

}  // namespace fixtures
