# Independent reference for generate_workload: MT19937-64 written from the
# published algorithm (checked against the standard 10000th-output value)
# plus the same rejection-sampling range map. Prints the golden workloads
# frozen in test_workload.cpp.
M=(1<<64)-1
class MT64:
    def __init__(s,seed):
        s.mt=[0]*312; s.mt[0]=seed&M
        for i in range(1,312): s.mt[i]=(6364136223846793005*(s.mt[i-1]^(s.mt[i-1]>>62))+i)&M
        s.i=312
    def twist(s):
        UM=0xFFFFFFFF80000000; LM=0x7FFFFFFF
        for i in range(312):
            x=(s.mt[i]&UM)|(s.mt[(i+1)%312]&LM)
            xa=x>>1
            if x&1: xa^=0xB5026F5AA96619E9
            s.mt[i]=s.mt[(i+156)%312]^xa
        s.i=0
    def __call__(s):
        if s.i>=312: s.twist()
        y=s.mt[s.i]; s.i+=1
        y^=(y>>29)&0x5555555555555555
        y^=(y<<17)&0x71D67FFFEDA60000
        y^=(y<<37)&0xFFF7EEE000000000
        y^=y>>43
        return y&M
g=MT64(5489)
for _ in range(9999): g()
assert g()==9981545732273789042
def draw(g,span):
    rng=span+1; limit=M-((M%rng+1)%rng)
    while True:
        x=g()
        if x<=limit: return x%rng
def gen(count,seed,amax,bmax):
    g=MT64(seed); out=[]
    for i in range(count):
        a=draw(g,amax); b=1+draw(g,bmax-1); out.append((f"P{i+1}",a,b))
    return out
import sys
print(gen(5,42,10,50))
print(gen(20,7,40,50))
